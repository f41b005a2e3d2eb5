//! Test-only helpers: an element-level set-semantics oracle written
//! independently of `modelcheck`, and proptest strategies.
#![allow(dead_code)]

use proptest::prelude::*;
use std::collections::BTreeSet;
use syllogistic::{parse_statement, Mark, RelKind, Statement, TermExpr};

/// A finite universe: each element is the list of atoms it belongs to.
pub struct SetModel {
    pub atoms: Vec<String>,
    pub elements: Vec<Vec<bool>>,
}

impl SetModel {
    pub fn members(&self, e: &TermExpr) -> BTreeSet<usize> {
        let all: BTreeSet<usize> = (0..self.elements.len()).collect();
        match e {
            TermExpr::Atom(a) => {
                let i = self
                    .atoms
                    .iter()
                    .position(|x| x == a)
                    .expect("atom in signature");
                all.into_iter().filter(|&k| self.elements[k][i]).collect()
            }
            TermExpr::Complement(x) => all.difference(&self.members(x)).copied().collect(),
            TermExpr::Meet(l, r) => self
                .members(l)
                .intersection(&self.members(r))
                .copied()
                .collect(),
            TermExpr::Join(l, r) => self.members(l).union(&self.members(r)).copied().collect(),
            TermExpr::Empty => BTreeSet::new(),
            TermExpr::Universe => all,
        }
    }

    pub fn holds(&self, s: &Statement) -> bool {
        match s {
            Statement::Monadic { mark, subject } => {
                (*mark == Mark::Inhabited) != self.members(subject).is_empty()
            }
            Statement::Dyadic { rel, lhs, rhs } => {
                let (l, r) = (self.members(lhs), self.members(rhs));
                let universe = self.elements.len();
                match rel {
                    RelKind::Eq => l == r,
                    RelKind::Neq => l != r,
                    RelKind::Subseteq => l.is_subset(&r),
                    RelKind::Nsubseteq => !l.is_subset(&r),
                    RelKind::Supseteq => r.is_subset(&l),
                    RelKind::Nsupseteq => !r.is_subset(&l),
                    RelKind::Propersub => l.is_subset(&r) && l != r,
                    RelKind::Propersup => r.is_subset(&l) && l != r,
                    RelKind::Conjoint => !l.is_disjoint(&r),
                    RelKind::Disjoint => l.is_disjoint(&r),
                    RelKind::Exhaustive => l.union(&r).count() == universe,
                    RelKind::Nonexhaustive => l.union(&r).count() != universe,
                }
            }
        }
    }
}

/// Every universe with at most one element per membership pattern. Any
/// set model over `atoms` agrees with one of these on every statement.
pub fn set_models(atoms: &[String]) -> impl Iterator<Item = SetModel> + '_ {
    let patterns = 1usize << atoms.len();
    (0u64..1u64 << patterns).map(move |chosen| SetModel {
        atoms: atoms.to_vec(),
        elements: (0..patterns)
            .filter(|p| chosen >> p & 1 == 1)
            .map(|p| (0..atoms.len()).map(|i| p >> i & 1 == 1).collect())
            .collect(),
    })
}

pub fn signature_of(stmts: &[&Statement]) -> Vec<String> {
    let mut sig = Vec::new();
    for s in stmts {
        for a in s.atoms() {
            if !sig.contains(&a) {
                sig.push(a);
            }
        }
    }
    sig
}

/// Brute-force entailment over the given signature.
pub fn entails_over(atoms: &[String], premises: &[Statement], conclusion: &Statement) -> bool {
    set_models(atoms).all(|m| !premises.iter().all(|p| m.holds(p)) || m.holds(conclusion))
}

pub fn entails(premises: &[Statement], conclusion: &Statement) -> bool {
    let mut all: Vec<&Statement> = premises.iter().collect();
    all.push(conclusion);
    entails_over(&signature_of(&all), premises, conclusion)
}

pub fn equivalent(a: &Statement, b: &Statement) -> bool {
    entails(std::slice::from_ref(a), b) && entails(std::slice::from_ref(b), a)
}

pub fn st(s: &str) -> Statement {
    parse_statement(s)
        .unwrap_or_else(|e| panic!("{s}: {e}"))
        .normalized()
}

pub fn atoms(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn arb_expr(atoms: &'static [&'static str]) -> impl Strategy<Value = TermExpr> {
    let leaf = prop_oneof![
        6 => proptest::sample::select(atoms).prop_map(TermExpr::atom),
        1 => Just(TermExpr::Empty),
        1 => Just(TermExpr::Universe),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(TermExpr::complement),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| TermExpr::meet(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| TermExpr::join(l, r)),
        ]
    })
}

pub const RELATIONS: [RelKind; 12] = [
    RelKind::Eq,
    RelKind::Neq,
    RelKind::Subseteq,
    RelKind::Nsubseteq,
    RelKind::Supseteq,
    RelKind::Nsupseteq,
    RelKind::Propersub,
    RelKind::Propersup,
    RelKind::Conjoint,
    RelKind::Disjoint,
    RelKind::Exhaustive,
    RelKind::Nonexhaustive,
];

pub fn arb_statement(atoms: &'static [&'static str]) -> impl Strategy<Value = Statement> {
    prop_oneof![
        8 => (proptest::sample::select(&RELATIONS[..]), arb_expr(atoms), arb_expr(atoms))
            .prop_map(|(rel, l, r)| Statement::dyadic(rel, l, r)),
        1 => (any::<bool>(), arb_expr(atoms)).prop_map(|(inh, subject)| Statement::Monadic {
            mark: if inh { Mark::Inhabited } else { Mark::EmptyClaim },
            subject,
        }),
    ]
}
