//! The trusted checker.
//!
//! A step is justified as a premise, as a schema application (instantiate
//! a schema with a binding and detach its conclusion from cited lines), or
//! as a substitution of equals (replace one occurrence of one side of a
//! cited equation by its other side). Comparison is tree equality; no
//! associativity or commutativity is ever applied implicitly.

use crate::systems::{AxiomSchema, SystemDef};
use crate::term::{RelKind, Statement, TermExpr};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Schema variable to expression.
pub type Binding = BTreeMap<String, TermExpr>;

/// Line label: `P3`, `S4`, or `C1` for declared conclusions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineId {
    pub prefix: char,
    pub number: u32,
}

impl LineId {
    pub fn new(prefix: char, number: u32) -> Self {
        LineId { prefix, number }
    }
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.prefix, self.number)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Premise,
    Schema {
        name: String,
        binding: Binding,
        reverse: bool,
        from: Vec<LineId>,
    },
    /// `r2l` replaces an occurrence of the equation's rhs by its lhs.
    Subst {
        equation: LineId,
        target: LineId,
        path: Vec<usize>,
        r2l: bool,
    },
}

impl Justification {
    pub fn cited(&self) -> Vec<LineId> {
        match self {
            Justification::Premise => Vec::new(),
            Justification::Schema { from, .. } => from.clone(),
            Justification::Subst {
                equation, target, ..
            } => vec![*equation, *target],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub id: LineId,
    pub stmt: Statement,
    pub just: Justification,
    /// Auxiliary line from splitting one proof step into two kernel steps.
    pub split: bool,
    /// Free-text trailing comment, kept for printing.
    pub note: Option<String>,
}

/// A proof: numbered lines plus the conclusions it claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub system: String,
    pub signature: Vec<String>,
    /// Lemma names pulled in from the lemma library.
    pub imports: Vec<String>,
    pub lines: Vec<Line>,
    pub goals: Vec<(LineId, Statement)>,
}

impl Proof {
    pub fn premises(&self) -> Vec<&Statement> {
        self.lines
            .iter()
            .filter(|l| l.just == Justification::Premise)
            .map(|l| &l.stmt)
            .collect()
    }

    pub fn conclusions(&self) -> Vec<&Statement> {
        self.goals.iter().map(|(_, s)| s).collect()
    }

    /// Derived lines that count as proof steps (split auxiliaries excluded).
    pub fn step_count(&self) -> usize {
        self.lines
            .iter()
            .filter(|l| l.just != Justification::Premise && !l.split)
            .count()
    }
}

/// A failed check, located at one line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}: {rule}: {reason}{}", match (.expected, .actual) {
    (Some(e), Some(a)) => format!(" (expected `{e}`, found `{a}`)"),
    _ => String::new(),
})]
pub struct Violation {
    pub line: String,
    pub rule: String,
    pub reason: String,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

impl Violation {
    fn new(line: LineId, rule: &str, reason: impl Into<String>) -> Self {
        Violation {
            line: line.to_string(),
            rule: rule.to_string(),
            reason: reason.into(),
            expected: None,
            actual: None,
        }
    }

    fn mismatch(
        line: LineId,
        rule: &str,
        reason: &str,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Violation {
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            ..Self::new(line, rule, reason)
        }
    }
}

/// Result of checking a whole proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    /// Axiom and definition names cited, with lemmas expanded.
    pub usage: BTreeSet<String>,
    pub violation: Option<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstantiateError {
    #[error("binding has no entry for schema variable `{0}`")]
    Missing(String),
    #[error("binding names `{0}`, which is not a variable of the schema")]
    Extra(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("position does not address a subexpression")]
    BadPosition,
    #[error("subexpression at position is `{actual}`, not `{expected}`")]
    Mismatch { expected: String, actual: String },
}

/// Simultaneous replacement of schema variables in one expression.
pub fn fill(e: &TermExpr, b: &Binding) -> TermExpr {
    match e {
        TermExpr::Atom(v) => b.get(v).cloned().unwrap_or_else(|| e.clone()),
        TermExpr::Complement(x) => TermExpr::complement(fill(x, b)),
        TermExpr::Meet(l, r) => TermExpr::meet(fill(l, b), fill(r, b)),
        TermExpr::Join(l, r) => TermExpr::join(fill(l, b), fill(r, b)),
        TermExpr::Empty | TermExpr::Universe => e.clone(),
    }
}

/// Simultaneous replacement of schema variables in one pattern.
pub fn fill_statement(s: &Statement, b: &Binding) -> Statement {
    match s {
        Statement::Dyadic { rel, lhs, rhs } => Statement::dyadic(*rel, fill(lhs, b), fill(rhs, b)),
        Statement::Monadic { mark, subject } => Statement::Monadic {
            mark: *mark,
            subject: fill(subject, b),
        },
    }
}

/// Instantiates all patterns of a schema. The binding must cover exactly
/// the schema's variables.
pub fn instantiate(
    schema: &AxiomSchema,
    binding: &Binding,
) -> Result<(Vec<Statement>, Statement), InstantiateError> {
    let vars = schema.vars();
    if let Some(v) = vars.iter().find(|v| !binding.contains_key(*v)) {
        return Err(InstantiateError::Missing(v.clone()));
    }
    if let Some(k) = binding.keys().find(|k| !vars.contains(k)) {
        return Err(InstantiateError::Extra(k.clone()));
    }
    let premises = schema
        .premises
        .iter()
        .map(|p| fill_statement(p, binding))
        .collect();
    Ok((premises, fill_statement(&schema.conclusion, binding)))
}

/// Replaces the single occurrence of `from` at `path` with `to`.
pub fn substitute_at(
    target: &Statement,
    path: &[usize],
    from: &TermExpr,
    to: &TermExpr,
) -> Result<Statement, SubstError> {
    let found = target.at(path).ok_or(SubstError::BadPosition)?;
    if found != from {
        return Err(SubstError::Mismatch {
            expected: from.to_string(),
            actual: found.to_string(),
        });
    }
    target
        .replaced_at(path, to.clone())
        .ok_or(SubstError::BadPosition)
}

pub fn format_path(path: &[usize]) -> String {
    path.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

fn lookup(prior: &[Line], id: LineId, at: LineId) -> Result<&Statement, Violation> {
    prior
        .iter()
        .find(|l| l.id == id)
        .map(|l| &l.stmt)
        .ok_or_else(|| {
            Violation::new(
                at,
                "cite",
                format!("line {id} is not available before this step"),
            )
        })
}

/// Checks one step against the lines before it. Returns the usage the
/// step contributes.
pub fn check_step(
    prior: &[Line],
    system: &SystemDef,
    step: &Line,
) -> Result<BTreeSet<String>, Violation> {
    let at = step.id;
    match &step.just {
        Justification::Premise => Ok(BTreeSet::new()),
        Justification::Schema {
            name,
            binding,
            reverse,
            from,
        } => {
            let schema = system.schema(name).ok_or_else(|| {
                Violation::new(
                    at,
                    name,
                    format!("unknown schema in system {}", system.name),
                )
            })?;
            if *reverse && !schema.bidirectional {
                return Err(Violation::new(
                    at,
                    name,
                    "reverse direction on a one-way schema",
                ));
            }
            let (mut premises, mut conclusion) = instantiate(schema, binding)
                .map_err(|e| Violation::new(at, name, e.to_string()))?;
            if *reverse {
                std::mem::swap(&mut premises[0], &mut conclusion);
            }
            if premises.len() != from.len() {
                return Err(Violation::new(
                    at,
                    name,
                    format!(
                        "schema has {} premise(s), step cites {}",
                        premises.len(),
                        from.len()
                    ),
                ));
            }
            for (i, (want, id)) in premises.iter().zip(from).enumerate() {
                let got = lookup(prior, *id, at)?;
                if got != want {
                    return Err(Violation::mismatch(
                        at,
                        name,
                        &format!("premise {} ({id}) mismatch", i + 1),
                        want,
                        got,
                    ));
                }
            }
            if conclusion != step.stmt {
                return Err(Violation::mismatch(
                    at,
                    name,
                    "conclusion mismatch",
                    &conclusion,
                    &step.stmt,
                ));
            }
            Ok(schema.usage())
        }
        Justification::Subst {
            equation,
            target,
            path,
            r2l,
        } => {
            let eq = lookup(prior, *equation, at)?;
            let (from, to) = match eq {
                Statement::Dyadic {
                    rel: RelKind::Eq,
                    lhs,
                    rhs,
                } => {
                    if *r2l {
                        (rhs, lhs)
                    } else {
                        (lhs, rhs)
                    }
                }
                other => {
                    return Err(Violation::new(
                        at,
                        "eq",
                        format!("line {equation} is not an equation: `{other}`"),
                    ))
                }
            };
            let tgt = lookup(prior, *target, at)?;
            let result = substitute_at(tgt, path, from, to).map_err(|e| {
                Violation::new(
                    at,
                    "eq",
                    format!("at {} in {target}: {e}", format_path(path)),
                )
            })?;
            if result != step.stmt {
                return Err(Violation::mismatch(
                    at,
                    "eq",
                    "result mismatch",
                    &result,
                    &step.stmt,
                ));
            }
            Ok(BTreeSet::new())
        }
    }
}

fn check_signature(proof: &Proof, line: &Line) -> Result<(), Violation> {
    let mut atoms = line.stmt.atoms();
    if let Justification::Schema { binding, .. } = &line.just {
        binding.values().for_each(|e| e.collect_atoms(&mut atoms));
    }
    match atoms.iter().find(|a| !proof.signature.contains(a)) {
        Some(a) => Err(Violation::new(
            line.id,
            "signature",
            format!("atom `{a}` is not declared"),
        )),
        None => Ok(()),
    }
}

/// Checks every line in order, then that each declared conclusion occurs
/// verbatim among the lines.
pub fn check_proof(proof: &Proof, system: &SystemDef) -> Verdict {
    let mut usage = BTreeSet::new();
    let fail = |usage: BTreeSet<String>, v: Violation| Verdict {
        ok: false,
        usage,
        violation: Some(v),
    };
    if system.name != proof.system {
        let v = Violation::new(
            LineId::new('P', 0),
            "system",
            format!(
                "proof is for {}, checked under {}",
                proof.system, system.name
            ),
        );
        return fail(usage, v);
    }
    for (i, line) in proof.lines.iter().enumerate() {
        if let Some(prev) = i.checked_sub(1).map(|j| &proof.lines[j]) {
            if line.id.number <= prev.id.number {
                let v = Violation::new(
                    line.id,
                    "order",
                    format!("line number does not increase after {}", prev.id),
                );
                return fail(usage, v);
            }
        }
        if let Err(v) = check_signature(proof, line) {
            return fail(usage, v);
        }
        match check_step(&proof.lines[..i], system, line) {
            Ok(u) => usage.extend(u),
            Err(v) => return fail(usage, v),
        }
    }
    for (id, goal) in &proof.goals {
        if !proof.lines.iter().any(|l| &l.stmt == goal) {
            return fail(
                usage,
                Violation::new(*id, "conclusion", format!("`{goal}` is not derived")),
            );
        }
    }
    Verdict {
        ok: true,
        usage,
        violation: None,
    }
}
