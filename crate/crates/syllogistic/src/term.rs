//! Term expressions, statements and categorical surface forms.
//!
//! Meet and join are strictly binary. Nothing in this module reassociates,
//! reorders or flattens a tree: equality is tree equality.

use std::fmt;

/// A class expression over named atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermExpr {
    Atom(String),
    Complement(Box<TermExpr>),
    Meet(Box<TermExpr>, Box<TermExpr>),
    Join(Box<TermExpr>, Box<TermExpr>),
    Empty,
    Universe,
}

impl TermExpr {
    pub fn atom(name: &str) -> Self {
        TermExpr::Atom(name.to_string())
    }

    pub fn complement(e: TermExpr) -> Self {
        TermExpr::Complement(Box::new(e))
    }

    pub fn meet(l: TermExpr, r: TermExpr) -> Self {
        TermExpr::Meet(Box::new(l), Box::new(r))
    }

    pub fn join(l: TermExpr, r: TermExpr) -> Self {
        TermExpr::Join(Box::new(l), Box::new(r))
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            TermExpr::Atom(_) | TermExpr::Empty | TermExpr::Universe => 1,
            TermExpr::Complement(e) => 1 + e.size(),
            TermExpr::Meet(l, r) | TermExpr::Join(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Children in position order: complement has child 0, meet and join
    /// have children 0 and 1.
    pub fn children(&self) -> Vec<&TermExpr> {
        match self {
            TermExpr::Complement(e) => vec![e],
            TermExpr::Meet(l, r) | TermExpr::Join(l, r) => vec![l, r],
            _ => Vec::new(),
        }
    }

    pub fn child(&self, index: usize) -> Option<&TermExpr> {
        match (self, index) {
            (TermExpr::Complement(e), 0) => Some(e),
            (TermExpr::Meet(l, _), 0) | (TermExpr::Join(l, _), 0) => Some(l),
            (TermExpr::Meet(_, r), 1) | (TermExpr::Join(_, r), 1) => Some(r),
            _ => None,
        }
    }

    fn child_mut(&mut self, index: usize) -> Option<&mut TermExpr> {
        match (self, index) {
            (TermExpr::Complement(e), 0) => Some(e),
            (TermExpr::Meet(l, _), 0) | (TermExpr::Join(l, _), 0) => Some(l),
            (TermExpr::Meet(_, r), 1) | (TermExpr::Join(_, r), 1) => Some(r),
            _ => None,
        }
    }

    /// Subexpression at a child-index path (empty path is `self`).
    pub fn at(&self, path: &[usize]) -> Option<&TermExpr> {
        let mut cur = self;
        for &i in path {
            cur = cur.child(i)?;
        }
        Some(cur)
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut TermExpr> {
        let mut cur = self;
        for &i in path {
            cur = cur.child_mut(i)?;
        }
        Some(cur)
    }

    /// Appends atom names to `out` in first-occurrence order, skipping repeats.
    pub fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            TermExpr::Atom(a) => {
                if !out.iter().any(|x| x == a) {
                    out.push(a.clone());
                }
            }
            TermExpr::Complement(e) => e.collect_atoms(out),
            TermExpr::Meet(l, r) | TermExpr::Join(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            TermExpr::Empty | TermExpr::Universe => {}
        }
    }

    /// Calls `f` on every subexpression with its path, preorder.
    pub fn visit<'a>(&'a self, path: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], &'a TermExpr)) {
        f(path, self);
        for (i, c) in self.children().into_iter().enumerate() {
            path.push(i);
            c.visit(path, f);
            path.pop();
        }
    }

    fn is_binary(&self) -> bool {
        matches!(self, TermExpr::Meet(..) | TermExpr::Join(..))
    }
}

impl fmt::Display for TermExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(f: &mut fmt::Formatter<'_>, e: &TermExpr) -> fmt::Result {
            if e.is_binary() {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            TermExpr::Atom(a) => f.write_str(a),
            TermExpr::Empty => f.write_str("0"),
            TermExpr::Universe => f.write_str("1"),
            TermExpr::Complement(e) => {
                operand(f, e)?;
                f.write_str("'")
            }
            TermExpr::Meet(l, r) => {
                operand(f, l)?;
                f.write_str("&")?;
                operand(f, r)
            }
            TermExpr::Join(l, r) => {
                operand(f, l)?;
                f.write_str("|")?;
                operand(f, r)
            }
        }
    }
}

/// Dyadic relation kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelKind {
    Eq,
    Neq,
    Subseteq,
    Nsubseteq,
    Supseteq,
    Nsupseteq,
    Propersub,
    Propersup,
    Conjoint,
    Disjoint,
    Exhaustive,
    Nonexhaustive,
}

impl RelKind {
    pub const ALL: [RelKind; 12] = [
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

    /// Contradictory kind. Proper inclusion has no contradictory kind in
    /// this vocabulary (`not (l < r)` is `l !<= r or l = r`), so it yields
    /// `None`; use a `MetaFormula::Not` for that case.
    pub fn negate(self) -> Option<RelKind> {
        use RelKind::*;
        Some(match self {
            Eq => Neq,
            Neq => Eq,
            Subseteq => Nsubseteq,
            Nsubseteq => Subseteq,
            Supseteq => Nsupseteq,
            Nsupseteq => Supseteq,
            Conjoint => Disjoint,
            Disjoint => Conjoint,
            Exhaustive => Nonexhaustive,
            Nonexhaustive => Exhaustive,
            Propersub | Propersup => return None,
        })
    }

    /// Kind obtained by swapping the two sides.
    pub fn converse(self) -> RelKind {
        use RelKind::*;
        match self {
            Subseteq => Supseteq,
            Supseteq => Subseteq,
            Nsubseteq => Nsupseteq,
            Nsupseteq => Nsubseteq,
            Propersub => Propersup,
            Propersup => Propersub,
            other => other,
        }
    }

    pub fn token(self) -> &'static str {
        use RelKind::*;
        match self {
            Eq => "=",
            Neq => "!=",
            Subseteq => "<=",
            Nsubseteq => "!<=",
            Supseteq => ">=",
            Nsupseteq => "!>=",
            Propersub => "<",
            Propersup => ">",
            Conjoint => "#",
            Disjoint => "!#",
            Exhaustive => "@",
            Nonexhaustive => "!@",
        }
    }
}

/// Leibniz-style monadic marks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Inhabited,
    EmptyClaim,
}

/// A claim about two classes, or about the (non)emptiness of one class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    Dyadic {
        rel: RelKind,
        lhs: TermExpr,
        rhs: TermExpr,
    },
    Monadic {
        mark: Mark,
        subject: TermExpr,
    },
}

impl Statement {
    pub fn dyadic(rel: RelKind, lhs: TermExpr, rhs: TermExpr) -> Self {
        Statement::Dyadic { rel, lhs, rhs }
    }

    pub fn eq(lhs: TermExpr, rhs: TermExpr) -> Self {
        Self::dyadic(RelKind::Eq, lhs, rhs)
    }

    /// Rewrites monadic marks into their dyadic form against `0`.
    pub fn normalized(self) -> Self {
        match self {
            Statement::Monadic {
                mark: Mark::Inhabited,
                subject,
            } => Self::dyadic(RelKind::Neq, subject, TermExpr::Empty),
            Statement::Monadic {
                mark: Mark::EmptyClaim,
                subject,
            } => Self::dyadic(RelKind::Eq, subject, TermExpr::Empty),
            d => d,
        }
    }

    /// Same statement with the relation replaced by its contradictory,
    /// when one exists.
    pub fn negated(&self) -> Option<Statement> {
        Some(match self {
            Statement::Dyadic { rel, lhs, rhs } => {
                Self::dyadic(rel.negate()?, lhs.clone(), rhs.clone())
            }
            Statement::Monadic { mark, subject } => Statement::Monadic {
                mark: match mark {
                    Mark::Inhabited => Mark::EmptyClaim,
                    Mark::EmptyClaim => Mark::Inhabited,
                },
                subject: subject.clone(),
            },
        })
    }

    /// Sides swapped and relation replaced by its converse.
    pub fn conversed(&self) -> Statement {
        match self {
            Statement::Dyadic { rel, lhs, rhs } => {
                Self::dyadic(rel.converse(), rhs.clone(), lhs.clone())
            }
            m => m.clone(),
        }
    }

    /// Node count of both sides (the relation itself is not counted).
    pub fn size(&self) -> usize {
        match self {
            Statement::Dyadic { lhs, rhs, .. } => lhs.size() + rhs.size(),
            Statement::Monadic { subject, .. } => subject.size(),
        }
    }

    /// Top-level operands in position order.
    pub fn sides(&self) -> Vec<&TermExpr> {
        match self {
            Statement::Dyadic { lhs, rhs, .. } => vec![lhs, rhs],
            Statement::Monadic { subject, .. } => vec![subject],
        }
    }

    fn side_mut(&mut self, index: usize) -> Option<&mut TermExpr> {
        match (self, index) {
            (Statement::Dyadic { lhs, .. }, 0) => Some(lhs),
            (Statement::Dyadic { rhs, .. }, 1) => Some(rhs),
            (Statement::Monadic { subject, .. }, 0) => Some(subject),
            _ => None,
        }
    }

    /// Subexpression at a position: first index picks the side.
    pub fn at(&self, path: &[usize]) -> Option<&TermExpr> {
        let (&first, rest) = path.split_first()?;
        self.sides().get(first)?.at(rest)
    }

    /// Copy with the subexpression at `path` replaced by `with`.
    pub fn replaced_at(&self, path: &[usize], with: TermExpr) -> Option<Statement> {
        let (&first, rest) = path.split_first()?;
        let mut out = self.clone();
        *out.side_mut(first)?.at_mut(rest)? = with;
        Some(out)
    }

    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    pub fn collect_atoms(&self, out: &mut Vec<String>) {
        for s in self.sides() {
            s.collect_atoms(out);
        }
    }

    /// Every subexpression with its position path, preorder by side.
    pub fn positions(&self) -> Vec<(Vec<usize>, &TermExpr)> {
        let mut out = Vec::new();
        for (i, side) in self.sides().into_iter().enumerate() {
            let mut path = vec![i];
            side.visit(&mut path, &mut |p, e| out.push((p.to_vec(), e)));
        }
        out
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Dyadic { rel, lhs, rhs } => write!(f, "{lhs}{}{rhs}", rel.token()),
            Statement::Monadic {
                mark: Mark::Inhabited,
                subject,
            } => write!(f, "inh({subject})"),
            Statement::Monadic {
                mark: Mark::EmptyClaim,
                subject,
            } => write!(f, "emp({subject})"),
        }
    }
}

/// The eight De Morgan relations plus the existential `Star` form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormKind {
    A,
    E,
    I,
    O,
    Aum,
    Eum,
    Ium,
    Oum,
    Star,
}

impl FormKind {
    /// Row order of the representation tables.
    pub const RELATIONS: [FormKind; 8] = [
        FormKind::I,
        FormKind::E,
        FormKind::O,
        FormKind::A,
        FormKind::Oum,
        FormKind::Aum,
        FormKind::Ium,
        FormKind::Eum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormKind::A => "A",
            FormKind::E => "E",
            FormKind::I => "I",
            FormKind::O => "O",
            FormKind::Aum => "Aum",
            FormKind::Eum => "Eum",
            FormKind::Ium => "Ium",
            FormKind::Oum => "Oum",
            FormKind::Star => "*",
        }
    }

    /// Accepts `A`, `Aum`, `A:` (ASCII umlaut), `*`/`Star`, case-insensitive.
    pub fn parse(s: &str) -> Option<FormKind> {
        Some(match s.to_ascii_lowercase().as_str() {
            "a" => FormKind::A,
            "e" => FormKind::E,
            "i" => FormKind::I,
            "o" => FormKind::O,
            "aum" | "a:" => FormKind::Aum,
            "eum" | "e:" => FormKind::Eum,
            "ium" | "i:" => FormKind::Ium,
            "oum" | "o:" => FormKind::Oum,
            "star" | "*" => FormKind::Star,
            _ => return None,
        })
    }
}

/// A categorical claim over concrete atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CategoricalForm {
    pub kind: FormKind,
    pub subject: String,
    /// Empty for `Star`.
    pub predicate: String,
}

impl CategoricalForm {
    pub fn new(kind: FormKind, subject: &str, predicate: &str) -> Self {
        CategoricalForm {
            kind,
            subject: subject.to_string(),
            predicate: predicate.to_string(),
        }
    }

    pub fn star(subject: &str) -> Self {
        CategoricalForm {
            kind: FormKind::Star,
            subject: subject.to_string(),
            predicate: String::new(),
        }
    }
}
