//! Representations of the eight De Morgan relations and the existential
//! `Star` form: the LC and ML surface forms, the algebraic table (six
//! columns in an equational and an order variant), the relational table
//! (plain, complemented, obverse, reverse, inverse, converse,
//! contrapositive) and the complement-free table.
//!
//! Table rows are transcribed as text over the atoms `b` and `c`.

use crate::modelcheck::MetaFormula;
use crate::parse::parse_statement;
use crate::term::{CategoricalForm, FormKind, Statement, TermExpr};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("form {0} has no representation in system {1}")]
    Unsupported(&'static str, String),
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
}

fn st(s: &str) -> Statement {
    parse_statement(s).expect("table entry parses")
}

fn atom(a: &str) -> TermExpr {
    TermExpr::atom(a)
}

fn not(a: &str) -> TermExpr {
    TermExpr::complement(atom(a))
}

/// Surface statement of a form in LC or ML.
pub fn to_system(form: &CategoricalForm, system: &str) -> Result<Statement, TranslateError> {
    use crate::term::RelKind::*;
    let (s, p) = (form.subject.as_str(), form.predicate.as_str());
    let lc = |rel, rhs_comp: bool, eq_self: bool| {
        let pred = if rhs_comp { not(p) } else { atom(p) };
        let rhs = if eq_self { atom(s) } else { TermExpr::Empty };
        Statement::dyadic(rel, TermExpr::meet(atom(s), pred), rhs)
    };
    match system {
        "LC" => Ok(match form.kind {
            FormKind::A => lc(Eq, false, true),
            FormKind::E => lc(Eq, true, true),
            FormKind::I => lc(Neq, false, false),
            FormKind::O => lc(Neq, true, false),
            FormKind::Star => Statement::dyadic(Neq, atom(s), TermExpr::Empty),
            k => return Err(TranslateError::Unsupported(k.name(), system.to_string())),
        }),
        "ML" => Ok(match form.kind {
            FormKind::A => Statement::dyadic(Subseteq, atom(s), atom(p)),
            FormKind::E => Statement::dyadic(Subseteq, atom(s), not(p)),
            FormKind::I => Statement::dyadic(Conjoint, atom(s), atom(p)),
            FormKind::O => Statement::dyadic(Conjoint, atom(s), not(p)),
            FormKind::Star => Statement::dyadic(Conjoint, atom(s), atom(s)),
            k => return Err(TranslateError::Unsupported(k.name(), system.to_string())),
        }),
        other => Err(TranslateError::UnknownSystem(other.to_string())),
    }
}

/// Reference reading of every form over `b`, `c`: emptiness or
/// inhabitation of one intersection of literals.
pub fn canonical(kind: FormKind) -> Statement {
    st(match kind {
        FormKind::I => "b&c!=0",
        FormKind::E => "b&c=0",
        FormKind::O => "b&c'!=0",
        FormKind::A => "b&c'=0",
        FormKind::Oum => "b'&c!=0",
        FormKind::Aum => "b'&c=0",
        FormKind::Ium => "b'&c'!=0",
        FormKind::Eum => "b'&c'=0",
        FormKind::Star => "b!=0",
    })
}

/// Form obtained by swapping subject and predicate.
pub fn converse_form(kind: FormKind) -> FormKind {
    match kind {
        FormKind::O => FormKind::Oum,
        FormKind::Oum => FormKind::O,
        FormKind::A => FormKind::Aum,
        FormKind::Aum => FormKind::A,
        k => k,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Equational,
    Order,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Cell {
    /// 0-based column.
    pub column: usize,
    pub variant: Variant,
    pub stmt: Statement,
}

const TABLE1: [(FormKind, [&str; 6], [&str; 6]); 8] = [
    (
        FormKind::I,
        [
            "b&c!=0", "b'|c'!=1", "b&c'!=b", "b'|c!=b'", "b'&c!=c", "b|c'!=c'",
        ],
        ["b&c>0", "b'|c'<1", "b&c'<b", "b'|c>b'", "b'&c<c", "b|c'>c'"],
    ),
    (
        FormKind::E,
        ["b&c=0", "b'|c'=1", "b&c'=b", "b'|c=b'", "b'&c=c", "b|c'=c'"],
        [
            "b&c<=0", "b'|c'>=1", "b&c'>=b", "b'|c<=b'", "b'&c>=c", "b|c'<=c'",
        ],
    ),
    (
        FormKind::O,
        [
            "b&c'!=0",
            "b'|c!=1",
            "b&c!=b",
            "b'|c'!=b'",
            "b'&c'!=c'",
            "b|c!=c",
        ],
        ["b&c'>0", "b'|c<1", "b&c<b", "b'|c'>b'", "b'&c'<c'", "b|c>c"],
    ),
    (
        FormKind::A,
        ["b&c'=0", "b'|c=1", "b&c=b", "b'|c'=b'", "b'&c'=c'", "b|c=c"],
        [
            "b&c'<=0",
            "b'|c>=1",
            "b&c>=b",
            "b'|c'<=b'",
            "b'&c'>=c'",
            "b|c<=c",
        ],
    ),
    (
        FormKind::Oum,
        [
            "b'&c!=0",
            "b|c'!=1",
            "b'&c'!=b'",
            "b|c!=b",
            "b&c!=c",
            "b'|c'!=c'",
        ],
        ["b'&c>0", "b|c'<1", "b'&c'<b'", "b|c>b", "b&c<c", "b'|c'>c'"],
    ),
    (
        FormKind::Aum,
        ["b'&c=0", "b|c'=1", "b'&c'=b'", "b|c=b", "b&c=c", "b'|c'=c'"],
        [
            "b'&c<=0",
            "b|c'>=1",
            "b'&c'>=b'",
            "b|c<=b",
            "b&c>=c",
            "b'|c'<=c'",
        ],
    ),
    (
        FormKind::Ium,
        [
            "b'&c'!=0", "b|c!=1", "b'&c!=b'", "b|c'!=b", "b&c'!=c'", "b'|c!=c",
        ],
        ["b'&c'>0", "b|c<1", "b'&c<b'", "b|c'>b", "b&c'<c'", "b'|c>c"],
    ),
    (
        FormKind::Eum,
        ["b'&c'=0", "b|c=1", "b'&c=b'", "b|c'=b", "b&c'=c'", "b'|c=c"],
        [
            "b'&c'<=0", "b|c>=1", "b'&c>=b'", "b|c'<=b", "b&c'>=c'", "b'|c<=c",
        ],
    ),
];

/// The twelve algebraic representations of a relation over `b`, `c`.
/// Empty for `Star`.
pub fn table1_row(kind: FormKind) -> Vec<Table1Cell> {
    let Some((_, eqs, ords)) = TABLE1.iter().find(|(k, _, _)| *k == kind) else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(12);
    for column in 0..6 {
        out.push(Table1Cell {
            column,
            variant: Variant::Equational,
            stmt: st(eqs[column]),
        });
        out.push(Table1Cell {
            column,
            variant: Variant::Order,
            stmt: st(ords[column]),
        });
    }
    out
}

pub const TABLE2_COLUMNS: [&str; 7] = [
    "plain",
    "complemented",
    "obverse",
    "reverse",
    "inverse",
    "converse",
    "contrapositive",
];

/// Plain statement and the statement the complemented column negates.
const TABLE2: [(FormKind, [&str; 7]); 8] = [
    (
        FormKind::I,
        ["b#c", "b!#c", "b!<=c'", "b'!>=c", "b'!@c'", "c#b", "c'!@b'"],
    ),
    (
        FormKind::E,
        ["b!#c", "b#c", "b<=c'", "b'>=c", "b'@c'", "c!#b", "c'@b'"],
    ),
    (
        FormKind::O,
        [
            "b!<=c", "b<=c", "b#c'", "b'!@c", "b'!>=c'", "c!>=b", "c'!<=b'",
        ],
    ),
    (
        FormKind::A,
        ["b<=c", "b!<=c", "b!#c'", "b'@c", "b'>=c'", "c>=b", "c'<=b'"],
    ),
    (
        FormKind::Oum,
        [
            "b!>=c", "b>=c", "b!@c'", "b'#c", "b'!<=c'", "c!<=b", "c'!>=b'",
        ],
    ),
    (
        FormKind::Aum,
        ["b>=c", "b!>=c", "b@c'", "b'!#c", "b'<=c'", "c<=b", "c'>=b'"],
    ),
    (
        FormKind::Ium,
        ["b!@c", "b@c", "b!>=c'", "b'!<=c", "b'#c'", "c!@b", "c'#b'"],
    ),
    (
        FormKind::Eum,
        ["b@c", "b!@c", "b>=c'", "b'<=c", "b'!#c'", "c@b", "c'!#b'"],
    ),
];

/// The seven relational representations of a relation over `b`, `c`, in
/// [`TABLE2_COLUMNS`] order. The complemented column is a meta-negation.
/// Empty for `Star`.
pub fn table2_row(kind: FormKind) -> Vec<MetaFormula> {
    let Some((_, cells)) = TABLE2.iter().find(|(k, _)| *k == kind) else {
        return Vec::new();
    };
    cells
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let f = MetaFormula::Stmt(st(s));
            if i == 1 {
                MetaFormula::negation(f)
            } else {
                f
            }
        })
        .collect()
}

/// The two columns the relational table omits: converse of the obverse
/// and converse of the reverse.
pub fn table2_derived(kind: FormKind) -> Vec<Statement> {
    let Some((_, cells)) = TABLE2.iter().find(|(k, _)| *k == kind) else {
        return Vec::new();
    };
    vec![st(cells[2]).conversed(), st(cells[3]).conversed()]
}

/// Representations that avoid complementation. Empty for `Star`.
pub fn no_complement_row(kind: FormKind) -> Vec<Statement> {
    let cells: &[&str] = match kind {
        FormKind::I => &["b&c>0"],
        FormKind::E => &["b&c=0"],
        FormKind::O => &["b&c<b", "b|c>c"],
        FormKind::A => &["b&c=b", "b|c=c"],
        FormKind::Oum => &["b&c<c", "b|c>b"],
        FormKind::Aum => &["b&c=c", "b|c=b"],
        FormKind::Ium => &["b|c<1"],
        FormKind::Eum => &["b|c=1"],
        FormKind::Star => &[],
    };
    cells.iter().map(|s| st(s)).collect()
}

fn aligned(rows: Vec<Vec<String>>) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = widths[i]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Text rendering of one row for the given target: `LC`, `ML`, `table1`,
/// `table2` or `nocomp`.
pub fn render(kind: FormKind, target: &str) -> Result<String, TranslateError> {
    match target {
        "LC" | "ML" => {
            let form = if kind == FormKind::Star {
                CategoricalForm::star("b")
            } else {
                CategoricalForm::new(kind, "b", "c")
            };
            let s = to_system(&form, target)?;
            Ok(aligned(vec![
                vec!["form".into(), target.into()],
                vec![kind.name().into(), s.to_string()],
            ]))
        }
        "table1" => {
            let row = table1_row(kind);
            let mut rows = vec![std::iter::once("variant".to_string())
                .chain((1..=6).map(|i| format!("col{i}")))
                .collect()];
            for v in [Variant::Equational, Variant::Order] {
                let name = if v == Variant::Equational {
                    "equational"
                } else {
                    "order"
                };
                rows.push(
                    std::iter::once(name.to_string())
                        .chain(
                            row.iter()
                                .filter(|c| c.variant == v)
                                .map(|c| c.stmt.to_string()),
                        )
                        .collect(),
                );
            }
            Ok(aligned(rows))
        }
        "table2" => {
            let mut rows: Vec<Vec<String>> = TABLE2_COLUMNS
                .iter()
                .zip(table2_row(kind))
                .map(|(c, f)| vec![c.to_string(), f.to_string()])
                .collect();
            for (c, s) in ["converse-of-obverse", "converse-of-reverse"]
                .iter()
                .zip(table2_derived(kind))
            {
                rows.push(vec![c.to_string(), s.to_string()]);
            }
            Ok(aligned(rows))
        }
        "nocomp" => Ok(aligned(
            no_complement_row(kind)
                .iter()
                .map(|s| vec![kind.name().to_string(), s.to_string()])
                .collect(),
        )),
        other => Err(TranslateError::UnknownSystem(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_surface_forms() {
        let e = CategoricalForm::new(FormKind::E, "b", "c");
        assert_eq!(to_system(&e, "LC").unwrap().to_string(), "b&c'=b");
        assert_eq!(
            to_system(&CategoricalForm::star("b"), "ML")
                .unwrap()
                .to_string(),
            "b#b"
        );
        assert_eq!(
            to_system(&CategoricalForm::new(FormKind::A, "b", "b"), "LC")
                .unwrap()
                .to_string(),
            "b&b=b"
        );
        assert!(to_system(&CategoricalForm::new(FormKind::Aum, "b", "c"), "LC").is_err());
        assert!(to_system(&e, "BL").is_err());
    }

    #[test]
    fn table_entries_as_printed() {
        let t1: Vec<String> = table1_row(FormKind::Eum)
            .iter()
            .map(|c| c.stmt.to_string())
            .collect();
        assert!(t1.contains(&"b|c=1".to_string()));
        let t1: Vec<String> = table1_row(FormKind::A)
            .iter()
            .map(|c| c.stmt.to_string())
            .collect();
        assert!(t1.contains(&"b|c=c".to_string()));
        let t1: Vec<String> = table1_row(FormKind::I)
            .iter()
            .map(|c| c.stmt.to_string())
            .collect();
        assert!(t1.contains(&"b&c>0".to_string()));
        let o = table2_row(FormKind::O);
        assert_eq!(
            (o[0].to_string(), o[2].to_string()),
            ("b!<=c".into(), "b#c'".into())
        );
        assert_eq!(table2_row(FormKind::Aum)[5].to_string(), "c<=b");
        assert_eq!(table2_row(FormKind::E)[6].to_string(), "c'@b'");
        assert_eq!(no_complement_row(FormKind::E)[0].to_string(), "b&c=0");
        assert_eq!(no_complement_row(FormKind::Ium)[0].to_string(), "b|c<1");
    }

    #[test]
    fn table_sizes() {
        let t1: usize = FormKind::RELATIONS
            .iter()
            .map(|k| table1_row(*k).len())
            .sum();
        let t2: usize = FormKind::RELATIONS
            .iter()
            .map(|k| table2_row(*k).len())
            .sum();
        assert_eq!((t1, t2), (96, 56));
    }

    #[test]
    fn render_table2_row_e() {
        let text = render(FormKind::E, "table2").unwrap();
        assert!(text.contains("b<=c'") && text.contains("c'@b'"));
    }
}
