//! Deduction engine for categorical syllogistic.
//!
//! Syllogisms are stated in three axiom systems: the equational
//! Leibniz-Cayley system (`LC`), the relational McColl-Ladd system (`ML`)
//! and Boolean lattices (`BL`). `LC+D` is `LC` with the two bridge
//! definitions that connect it to `ML`.
//!
//! * [`term`] and [`parse`]: expressions, statements and their ASCII syntax.
//! * [`modelcheck`]: exhaustive minterm-emptiness semantics.
//! * [`systems`]: axiom schemas as data.
//! * [`kernel`]: the trusted step checker.
//! * [`script`]: the proof-script text format.
//! * [`search`]: bounded forward proof search and exhaustion certificates.
//! * [`translate`]: representation tables for the eight relations.
//! * [`corpus`]: the embedded proof library and syllogism catalog.

pub mod corpus;
pub mod kernel;
pub mod modelcheck;
pub mod parse;
pub mod script;
pub mod search;
pub mod systems;
pub mod term;
pub mod translate;

pub use kernel::{check_proof, Binding, Justification, Line, LineId, Proof, Verdict, Violation};
pub use modelcheck::{equivalent, valid, MetaFormula, Model, ValidityReport};
pub use parse::{parse_expr, parse_statement, ParseError};
pub use systems::{AxiomSchema, SchemaKind, SystemDef};
pub use term::{CategoricalForm, FormKind, Mark, RelKind, Statement, TermExpr};
