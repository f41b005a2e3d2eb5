//! Exhaustive semantics over minterm-emptiness models.
//!
//! A model over `n` atoms marks each of the `2^n` minterms empty or
//! inhabited. Minterm `k` has atom `i` positive iff bit `i` of `k` is set
//! (low bit = first atom). Model `j` in enumeration order has minterm `k`
//! inhabited iff bit `k` of `j` is set, so the all-empty model comes first.
//! Expressions denote sets of minterms, held as `u64` bitmasks.

use crate::term::{Mark, RelKind, Statement, TermExpr};
use std::fmt;
use thiserror::Error;

/// Atom cap used by the free functions.
pub const DEFAULT_MAX_ATOMS: usize = 4;
/// Largest signature the bitmask representation supports.
pub const HARD_MAX_ATOMS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("atom `{0}` is not in the signature")]
    SignatureMismatch(String),
    #[error("signature has {atoms} atoms; the exhaustive oracle is capped at {cap}")]
    TooManyAtoms { atoms: usize, cap: usize },
}

/// Emptiness assignment for every minterm of a signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub signature: Vec<String>,
    /// Bit `k` set iff minterm `k` is inhabited.
    pub inhabited: u64,
}

impl Model {
    pub fn minterm_count(&self) -> usize {
        1 << self.signature.len()
    }

    pub fn is_inhabited(&self, minterm: usize) -> bool {
        self.inhabited >> minterm & 1 == 1
    }

    /// Literal string of a minterm, e.g. `s m' p`.
    pub fn minterm_label(signature: &[String], minterm: usize) -> String {
        if signature.is_empty() {
            return "(universe)".to_string();
        }
        signature
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if minterm >> i & 1 == 1 {
                    a.clone()
                } else {
                    format!("{a}'")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.minterm_count())
            .map(|k| Model::minterm_label(&self.signature, k))
            .collect();
        let width = labels.iter().map(String::len).max().unwrap_or(0);
        for (k, label) in labels.iter().enumerate() {
            let state = if self.is_inhabited(k) {
                "inhabited"
            } else {
                "empty"
            };
            writeln!(f, "{label:<width$}  {state}")?;
        }
        Ok(())
    }
}

/// Boolean combination of statements, evaluated in a single model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetaFormula {
    Stmt(Statement),
    And(Vec<MetaFormula>),
    Or(Vec<MetaFormula>),
    Not(Box<MetaFormula>),
}

impl MetaFormula {
    pub fn negation(f: MetaFormula) -> Self {
        MetaFormula::Not(Box::new(f))
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            MetaFormula::Stmt(s) => s.collect_atoms(out),
            MetaFormula::And(fs) | MetaFormula::Or(fs) => {
                fs.iter().for_each(|f| f.collect_atoms(out))
            }
            MetaFormula::Not(f) => f.collect_atoms(out),
        }
    }
}

impl From<Statement> for MetaFormula {
    fn from(s: Statement) -> Self {
        MetaFormula::Stmt(s)
    }
}

impl fmt::Display for MetaFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, fs: &[MetaFormula], sep: &str| {
            let parts: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(sep))
        };
        match self {
            MetaFormula::Stmt(s) => write!(f, "{s}"),
            MetaFormula::And(fs) => list(f, fs, " and "),
            MetaFormula::Or(fs) => list(f, fs, " or "),
            MetaFormula::Not(x) => write!(f, "~({x})"),
        }
    }
}

/// Outcome of an exhaustive validity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityReport {
    pub valid: bool,
    pub countermodel: Option<Model>,
    pub models_checked: u64,
}

/// Set of minterms denoted by `expr`.
pub fn denote(expr: &TermExpr, signature: &[String]) -> Result<u64, ModelError> {
    let n = signature.len();
    if n > HARD_MAX_ATOMS {
        return Err(ModelError::TooManyAtoms {
            atoms: n,
            cap: HARD_MAX_ATOMS,
        });
    }
    let full = full_mask(n);
    Ok(match expr {
        TermExpr::Atom(a) => {
            let i = signature
                .iter()
                .position(|x| x == a)
                .ok_or_else(|| ModelError::SignatureMismatch(a.clone()))?;
            (0..1usize << n)
                .filter(|k| k >> i & 1 == 1)
                .fold(0, |m, k| m | 1 << k)
        }
        TermExpr::Complement(e) => !denote(e, signature)? & full,
        TermExpr::Meet(l, r) => denote(l, signature)? & denote(r, signature)?,
        TermExpr::Join(l, r) => denote(l, signature)? | denote(r, signature)?,
        TermExpr::Empty => 0,
        TermExpr::Universe => full,
    })
}

fn full_mask(n: usize) -> u64 {
    let m = 1u32 << n;
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// A statement lowered to bitmasks for repeated evaluation.
#[derive(Clone, Copy)]
struct Compiled {
    rel: RelKind,
    l: u64,
    r: u64,
    full: u64,
}

impl Compiled {
    fn new(stmt: &Statement, signature: &[String]) -> Result<Self, ModelError> {
        let full = full_mask(signature.len());
        Ok(match stmt {
            Statement::Dyadic { rel, lhs, rhs } => Compiled {
                rel: *rel,
                l: denote(lhs, signature)?,
                r: denote(rhs, signature)?,
                full,
            },
            Statement::Monadic { mark, subject } => Compiled {
                rel: if *mark == Mark::Inhabited {
                    RelKind::Neq
                } else {
                    RelKind::Eq
                },
                l: denote(subject, signature)?,
                r: 0,
                full,
            },
        })
    }

    fn eval(self, inh: u64) -> bool {
        let Compiled { rel, l, r, full } = self;
        let eq = (l ^ r) & inh == 0;
        let sub = l & !r & inh == 0;
        let sup = r & !l & inh == 0;
        match rel {
            RelKind::Eq => eq,
            RelKind::Neq => !eq,
            RelKind::Subseteq => sub,
            RelKind::Nsubseteq => !sub,
            RelKind::Supseteq => sup,
            RelKind::Nsupseteq => !sup,
            RelKind::Propersub => sub && !eq,
            RelKind::Propersup => sup && !eq,
            RelKind::Conjoint => l & r & inh != 0,
            RelKind::Disjoint => l & r & inh == 0,
            RelKind::Exhaustive => !(l | r) & full & inh == 0,
            RelKind::Nonexhaustive => !(l | r) & full & inh != 0,
        }
    }
}

enum CompiledMeta {
    Stmt(Compiled),
    And(Vec<CompiledMeta>),
    Or(Vec<CompiledMeta>),
    Not(Box<CompiledMeta>),
}

impl CompiledMeta {
    fn new(f: &MetaFormula, signature: &[String]) -> Result<Self, ModelError> {
        Ok(match f {
            MetaFormula::Stmt(s) => CompiledMeta::Stmt(Compiled::new(s, signature)?),
            MetaFormula::And(fs) => CompiledMeta::And(
                fs.iter()
                    .map(|x| CompiledMeta::new(x, signature))
                    .collect::<Result<_, _>>()?,
            ),
            MetaFormula::Or(fs) => CompiledMeta::Or(
                fs.iter()
                    .map(|x| CompiledMeta::new(x, signature))
                    .collect::<Result<_, _>>()?,
            ),
            MetaFormula::Not(x) => CompiledMeta::Not(Box::new(CompiledMeta::new(x, signature)?)),
        })
    }

    fn eval(&self, inh: u64) -> bool {
        match self {
            CompiledMeta::Stmt(c) => c.eval(inh),
            CompiledMeta::And(fs) => fs.iter().all(|f| f.eval(inh)),
            CompiledMeta::Or(fs) => fs.iter().any(|f| f.eval(inh)),
            CompiledMeta::Not(f) => !f.eval(inh),
        }
    }
}

/// Truth of a statement in one model.
pub fn holds(stmt: &Statement, model: &Model) -> Result<bool, ModelError> {
    Ok(Compiled::new(stmt, &model.signature)?.eval(model.inhabited))
}

/// Truth of a meta-formula in one model.
pub fn holds_meta(f: &MetaFormula, model: &Model) -> Result<bool, ModelError> {
    Ok(CompiledMeta::new(f, &model.signature)?.eval(model.inhabited))
}

/// Exhaustive oracle with a configurable atom cap.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub max_atoms: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_atoms: DEFAULT_MAX_ATOMS,
        }
    }
}

impl Oracle {
    pub fn new(max_atoms: usize) -> Self {
        Oracle {
            max_atoms: max_atoms.min(HARD_MAX_ATOMS),
        }
    }

    fn model_count(&self, signature: &[String]) -> Result<u64, ModelError> {
        if signature.len() > self.max_atoms {
            return Err(ModelError::TooManyAtoms {
                atoms: signature.len(),
                cap: self.max_atoms,
            });
        }
        Ok(1u64 << (1u32 << signature.len()))
    }

    /// Validity of `premises ⊨ conclusion` over an explicit signature.
    pub fn entails_over(
        &self,
        signature: &[String],
        premises: &[MetaFormula],
        conclusion: &MetaFormula,
    ) -> Result<ValidityReport, ModelError> {
        let count = self.model_count(signature)?;
        let ps: Vec<CompiledMeta> = premises
            .iter()
            .map(|p| CompiledMeta::new(p, signature))
            .collect::<Result<_, _>>()?;
        let c = CompiledMeta::new(conclusion, signature)?;
        for inh in 0..count {
            if ps.iter().all(|p| p.eval(inh)) && !c.eval(inh) {
                return Ok(ValidityReport {
                    valid: false,
                    countermodel: Some(Model {
                        signature: signature.to_vec(),
                        inhabited: inh,
                    }),
                    models_checked: inh + 1,
                });
            }
        }
        Ok(ValidityReport {
            valid: true,
            countermodel: None,
            models_checked: count,
        })
    }

    pub fn entails(
        &self,
        premises: &[MetaFormula],
        conclusion: &MetaFormula,
    ) -> Result<ValidityReport, ModelError> {
        let mut sig = Vec::new();
        premises.iter().for_each(|p| p.collect_atoms(&mut sig));
        conclusion.collect_atoms(&mut sig);
        self.entails_over(&sig, premises, conclusion)
    }

    pub fn valid_over(
        &self,
        signature: &[String],
        premises: &[Statement],
        conclusion: &Statement,
    ) -> Result<ValidityReport, ModelError> {
        let ps: Vec<MetaFormula> = premises.iter().cloned().map(MetaFormula::Stmt).collect();
        self.entails_over(signature, &ps, &MetaFormula::Stmt(conclusion.clone()))
    }

    /// Validity over the atoms of the statements, in first-occurrence order.
    pub fn valid(
        &self,
        premises: &[Statement],
        conclusion: &Statement,
    ) -> Result<ValidityReport, ModelError> {
        let mut sig = Vec::new();
        premises.iter().for_each(|p| p.collect_atoms(&mut sig));
        conclusion.collect_atoms(&mut sig);
        self.valid_over(&sig, premises, conclusion)
    }

    /// Same truth value in every model of the combined signature.
    pub fn equivalent(&self, a: &MetaFormula, b: &MetaFormula) -> Result<bool, ModelError> {
        let mut sig = Vec::new();
        a.collect_atoms(&mut sig);
        b.collect_atoms(&mut sig);
        let count = self.model_count(&sig)?;
        let (ca, cb) = (CompiledMeta::new(a, &sig)?, CompiledMeta::new(b, &sig)?);
        Ok((0..count).all(|inh| ca.eval(inh) == cb.eval(inh)))
    }
}

/// [`Oracle::valid`] with the default atom cap.
pub fn valid(premises: &[Statement], conclusion: &Statement) -> Result<ValidityReport, ModelError> {
    Oracle::default().valid(premises, conclusion)
}

/// [`Oracle::equivalent`] with the default atom cap.
pub fn equivalent(a: &MetaFormula, b: &MetaFormula) -> Result<bool, ModelError> {
    Oracle::default().equivalent(a, b)
}

/// [`Oracle::entails`] with the default atom cap.
pub fn entails(
    premises: &[MetaFormula],
    conclusion: &MetaFormula,
) -> Result<ValidityReport, ModelError> {
    Oracle::default().entails(premises, conclusion)
}

/// First falsifying model in enumeration order, if any.
pub fn countermodel_search(
    premises: &[Statement],
    conclusion: &Statement,
) -> Result<Option<Model>, ModelError> {
    Ok(valid(premises, conclusion)?.countermodel)
}

/// Every model of a signature in enumeration order.
pub fn all_models(
    signature: &[String],
    max_atoms: usize,
) -> Result<impl Iterator<Item = Model> + '_, ModelError> {
    let count = Oracle::new(max_atoms).model_count(signature)?;
    Ok((0..count).map(move |inhabited| Model {
        signature: signature.to_vec(),
        inhabited,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_expr, parse_statement};

    fn sig(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn st(s: &str) -> Statement {
        parse_statement(s).unwrap()
    }

    #[test]
    fn denotation_of_literals() {
        let bc = sig(&["b", "c"]);
        // minterm 3 = b c, 2 = b' c, 1 = b c', 0 = b' c'
        assert_eq!(denote(&parse_expr("b&c").unwrap(), &bc).unwrap(), 0b1000);
        assert_eq!(denote(&parse_expr("b'").unwrap(), &bc).unwrap(), 0b0101);
        assert_eq!(denote(&parse_expr("b|b'").unwrap(), &bc).unwrap(), 0b1111);
        assert!(matches!(
            denote(&parse_expr("d").unwrap(), &bc),
            Err(ModelError::SignatureMismatch(_))
        ));
    }

    #[test]
    fn disjoint_holds_when_bc_is_empty() {
        let m = Model {
            signature: sig(&["b", "c"]),
            inhabited: 0b0111,
        };
        assert!(holds(&st("b!#c"), &m).unwrap());
        assert!(!holds(&st("b#c"), &m).unwrap());
    }

    #[test]
    fn barbara_is_valid_over_256_models() {
        let r = valid(&[st("s<=m"), st("m<=p")], &st("s<=p")).unwrap();
        assert!(r.valid);
        assert_eq!(r.models_checked, 256);
    }

    #[test]
    fn darapti_without_existential_premise_fails_in_empty_model() {
        let r = valid(&[st("m<=s"), st("m<=p")], &st("s#p")).unwrap();
        assert_eq!(r.countermodel.unwrap().inhabited, 0);
    }

    #[test]
    fn reflexive_equation_is_valid_without_premises() {
        assert!(valid(&[], &st("s=s")).unwrap().valid);
    }

    #[test]
    fn oracle_rejects_oversized_signatures() {
        let big = st("a&(b&(c&(d&e)))=a");
        assert!(matches!(
            valid(&[], &big),
            Err(ModelError::TooManyAtoms { atoms: 5, cap: 4 })
        ));
        assert!(Oracle::new(5).valid(&[], &big).is_ok());
    }

    #[test]
    fn countermodel_table_lists_every_minterm() {
        let m = Model {
            signature: sig(&["s", "m"]),
            inhabited: 0b0010,
        };
        let text = m.to_string();
        assert_eq!(text.lines().count(), 4);
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split_whitespace().collect())
            .collect();
        assert!(rows.contains(&vec!["s", "m'", "inhabited"]));
        assert!(rows.contains(&vec!["s'", "m'", "empty"]));
    }
}
