//! Axiom schemas of the LC, ML and BL systems, the D1/D2 bridge
//! definitions and the derived lemma schemas.
//!
//! Schemas are data. Every atom in a schema pattern is a schema variable;
//! the kernel fills them with a [`crate::kernel::Binding`].

use crate::parse::parse_statement;
use crate::term::Statement;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemaKind {
    Axiom,
    Lemma,
    Definition,
}

/// A named inference or equation schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSchema {
    pub name: String,
    pub premises: Vec<Statement>,
    pub conclusion: Statement,
    /// `⟚` rather than `⊢`; only for single-premise schemas.
    pub bidirectional: bool,
    pub kind: SchemaKind,
    /// For lemmas: the axiom and definition names its derivation uses.
    pub expands_to: BTreeSet<String>,
}

impl AxiomSchema {
    fn build(
        name: &str,
        premises: &[&str],
        conclusion: &str,
        bidirectional: bool,
        kind: SchemaKind,
    ) -> Self {
        let parse = |s: &str| {
            parse_statement(s)
                .expect("built-in schema pattern parses")
                .normalized()
        };
        let schema = AxiomSchema {
            name: name.to_string(),
            premises: premises.iter().map(|p| parse(p)).collect(),
            conclusion: parse(conclusion),
            bidirectional,
            kind,
            expands_to: BTreeSet::new(),
        };
        debug_assert!(!bidirectional || schema.premises.len() == 1);
        schema
    }

    fn axiom(name: &str, premises: &[&str], conclusion: &str) -> Self {
        Self::build(name, premises, conclusion, false, SchemaKind::Axiom)
    }

    fn equivalence(name: &str, premise: &str, conclusion: &str, kind: SchemaKind) -> Self {
        Self::build(name, &[premise], conclusion, true, kind)
    }

    fn lemma(mut self, uses: &[&str]) -> Self {
        self.kind = SchemaKind::Lemma;
        self.expands_to = uses.iter().map(|s| s.to_string()).collect();
        self
    }

    /// Schema variables in first-occurrence order.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.premises.iter().for_each(|p| p.collect_atoms(&mut out));
        self.conclusion.collect_atoms(&mut out);
        out
    }

    pub fn is_premise_free(&self) -> bool {
        self.premises.is_empty()
    }

    /// Names contributed to a proof's axiom usage when this schema is cited.
    pub fn usage(&self) -> BTreeSet<String> {
        match self.kind {
            SchemaKind::Lemma => self.expands_to.clone(),
            _ => BTreeSet::from([self.name.clone()]),
        }
    }
}

/// A named collection of schemas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDef {
    pub name: String,
    pub schemas: Vec<AxiomSchema>,
}

impl SystemDef {
    pub fn schema(&self, name: &str) -> Option<&AxiomSchema> {
        self.schemas.iter().find(|s| s.name == name)
    }

    /// This system extended with lemmas from [`lemma_library`].
    pub fn with_imports(&self, names: &[String]) -> Result<SystemDef, String> {
        let library = lemma_library();
        let mut out = self.clone();
        for name in names {
            if out.schema(name).is_some() {
                continue;
            }
            let lemma = library
                .iter()
                .find(|l| &l.name == name)
                .ok_or_else(|| name.clone())?;
            out.schemas.push(lemma.clone());
        }
        Ok(out)
    }
}

/// LC1 to LC5 plus the LC6 lemma.
pub fn lc_system() -> SystemDef {
    SystemDef {
        name: "LC".to_string(),
        schemas: vec![
            AxiomSchema::axiom("LC1", &[], "b&c=c&b"),
            AxiomSchema::axiom("LC2", &[], "b&(c&d)=(b&c)&d"),
            AxiomSchema::axiom("LC3", &["b&c!=0"], "c!=0"),
            AxiomSchema::equivalence("LC4", "b&c=b", "c'&b'=c'", SchemaKind::Axiom),
            AxiomSchema::equivalence("LC5", "b&c'=b", "c&b'=c", SchemaKind::Axiom),
            lc6(),
        ],
    }
}

fn lc6() -> AxiomSchema {
    AxiomSchema::axiom("LC6", &["b&c!=0"], "b!=0").lemma(&["LC1", "LC3"])
}

/// ML1 to ML5 plus the ML6 lemma.
pub fn ml_system() -> SystemDef {
    SystemDef {
        name: "ML".to_string(),
        schemas: vec![
            AxiomSchema::equivalence("ML1", "b#c", "c#b", SchemaKind::Axiom),
            AxiomSchema::equivalence("ML2", "b<=c", "c'<=b'", SchemaKind::Axiom),
            AxiomSchema::equivalence("ML3", "b<=c'", "c<=b'", SchemaKind::Axiom),
            AxiomSchema::axiom("ML4", &["b<=c", "c<=d"], "b<=d"),
            AxiomSchema::axiom("ML5", &["b#c", "c<=d"], "b#d"),
            ml6(),
        ],
    }
}

fn ml6() -> AxiomSchema {
    AxiomSchema::axiom("ML6", &["c#b", "c<=d"], "d#b").lemma(&["ML1", "ML5"])
}

/// The fourteen Boolean-lattice equations.
pub fn bl_system() -> SystemDef {
    let eqs = [
        ("idem-meet", "b&b=b"),
        ("idem-join", "b|b=b"),
        ("comm-meet", "b&c=c&b"),
        ("comm-join", "b|c=c|b"),
        ("assoc-meet", "(b&c)&d=b&(c&d)"),
        ("assoc-join", "(b|c)|d=b|(c|d)"),
        ("absorb-meet", "b&(b|c)=b"),
        ("absorb-join", "b|(b&c)=b"),
        ("dist-meet", "b&(c|d)=(b&c)|(b&d)"),
        ("dist-join", "b|(c&d)=(b|c)&(b|d)"),
        ("ident-meet", "b&1=b"),
        ("ident-join", "b|0=b"),
        ("compl-meet", "b&b'=0"),
        ("compl-join", "b|b'=1"),
    ];
    SystemDef {
        name: "BL".to_string(),
        schemas: eqs
            .iter()
            .map(|(n, e)| AxiomSchema::axiom(n, &[], e))
            .collect(),
    }
}

/// Theorems of BL, each proved by a corpus script and importable as lemmas.
pub fn bl_theorems() -> Vec<AxiomSchema> {
    use SchemaKind::Lemma;
    vec![
        AxiomSchema::axiom("dom-meet", &[], "b&0=0").lemma(&[
            "assoc-meet",
            "compl-meet",
            "idem-meet",
        ]),
        AxiomSchema::axiom("dom-join", &[], "b|1=1").lemma(&[
            "assoc-join",
            "compl-join",
            "idem-join",
        ]),
        AxiomSchema::equivalence("subsumption", "b&c=b", "b|c=c", Lemma).lemma(&[
            "absorb-join",
            "absorb-meet",
            "comm-join",
            "comm-meet",
        ]),
        AxiomSchema::axiom("subsup", &["b&c=b", "b|c=b"], "b=c").lemma(&[
            "absorb-join",
            "comm-join",
            "comm-meet",
        ]),
        AxiomSchema::axiom("involution", &[], "b''=b").lemma(&[
            "absorb-join",
            "comm-join",
            "comm-meet",
            "compl-join",
            "compl-meet",
            "dist-join",
            "dist-meet",
            "ident-join",
            "ident-meet",
        ]),
        AxiomSchema::equivalence("compl-equals", "b=c", "b'=c'", Lemma).lemma(&[
            "absorb-join",
            "comm-join",
            "comm-meet",
            "compl-join",
            "compl-meet",
            "dist-join",
            "dist-meet",
            "ident-join",
            "ident-meet",
        ]),
        AxiomSchema::axiom("uniq-compl1", &["b&c=0", "b|c=1"], "c=b'").lemma(&[
            "comm-meet",
            "compl-join",
            "compl-meet",
            "dist-meet",
            "ident-meet",
        ]),
        AxiomSchema::axiom("uniq-compl2", &["b&c'=0", "b|c'=1"], "c=b").lemma(&[
            "absorb-join",
            "comm-join",
            "comm-meet",
            "compl-join",
            "compl-meet",
            "dist-join",
            "dist-meet",
            "ident-join",
            "ident-meet",
        ]),
        AxiomSchema::axiom("demorgan-meet", &[], "(b&c)'=b'|c'").lemma(&[
            "absorb-join",
            "assoc-join",
            "assoc-meet",
            "comm-join",
            "comm-meet",
            "compl-join",
            "compl-meet",
            "dist-join",
            "dist-meet",
            "ident-join",
            "ident-meet",
            "idem-join",
            "idem-meet",
        ]),
        AxiomSchema::axiom("demorgan-join", &[], "(b|c)'=b'&c'").lemma(&[
            "absorb-join",
            "assoc-join",
            "assoc-meet",
            "comm-join",
            "comm-meet",
            "compl-join",
            "compl-meet",
            "dist-join",
            "dist-meet",
            "ident-join",
            "ident-meet",
            "idem-join",
            "idem-meet",
        ]),
    ]
}

/// D1 and D2, linking `<=` and `#` to the LC equations.
pub fn bridge_definitions() -> Vec<AxiomSchema> {
    vec![
        AxiomSchema::equivalence("D1", "b<=c", "b&c=b", SchemaKind::Definition),
        AxiomSchema::equivalence("D2", "b#c", "b&c!=0", SchemaKind::Definition),
    ]
}

/// LC together with D1 and D2.
pub fn lcd_system() -> SystemDef {
    let mut sys = lc_system();
    sys.name = "LC+D".to_string();
    sys.schemas.extend(bridge_definitions());
    sys
}

/// Every lemma schema a script may import.
pub fn lemma_library() -> Vec<AxiomSchema> {
    let mut out = vec![lc6(), ml6()];
    out.extend(bl_theorems());
    out
}

/// Looks a system up by its script/CLI name.
pub fn system_by_name(name: &str) -> Option<SystemDef> {
    match name {
        "LC" => Some(lc_system()),
        "ML" => Some(ml_system()),
        "BL" => Some(bl_system()),
        "LC+D" => Some(lcd_system()),
        _ => None,
    }
}

pub const SYSTEM_NAMES: [&str; 4] = ["LC", "ML", "BL", "LC+D"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_sizes_and_unique_names() {
        assert_eq!(lc_system().schemas.len(), 6);
        assert_eq!(ml_system().schemas.len(), 6);
        assert_eq!(bl_system().schemas.len(), 14);
        assert_eq!(lcd_system().schemas.len(), 8);
        for sys in SYSTEM_NAMES.iter().map(|n| system_by_name(n).unwrap()) {
            let names: BTreeSet<_> = sys.schemas.iter().map(|s| &s.name).collect();
            assert_eq!(names.len(), sys.schemas.len(), "{}", sys.name);
        }
        let lib: BTreeSet<_> = lemma_library().into_iter().map(|s| s.name).collect();
        assert_eq!(lib.len(), lemma_library().len());
    }

    #[test]
    fn lc_shapes() {
        let lc = lc_system();
        let lc3 = lc.schema("LC3").unwrap();
        assert_eq!(lc3.premises[0].to_string(), "b&c!=0");
        assert_eq!(lc3.conclusion.to_string(), "c!=0");
        for n in ["LC1", "LC2"] {
            assert!(lc.schema(n).unwrap().is_premise_free());
        }
        for n in ["LC4", "LC5"] {
            assert!(lc.schema(n).unwrap().bidirectional);
        }
        assert_eq!(lc.schema("LC6").unwrap().kind, SchemaKind::Lemma);
        assert_eq!(
            lc.schema("LC6").unwrap().usage(),
            BTreeSet::from(["LC1".into(), "LC3".into()])
        );
    }

    #[test]
    fn bl_contains_axioms_but_not_involution() {
        let bl = bl_system();
        let printed: Vec<String> = bl
            .schemas
            .iter()
            .map(|s| s.conclusion.to_string())
            .collect();
        assert!(printed.contains(&"b|(b&c)=b".to_string()));
        assert!(printed.contains(&"b&(c|d)=(b&c)|(b&d)".to_string()));
        assert!(!printed.contains(&"b''=b".to_string()));
        assert!(bl.schemas.iter().all(AxiomSchema::is_premise_free));
    }

    #[test]
    fn conclusion_vars_occur_in_premises_unless_premise_free() {
        for s in lc_system()
            .schemas
            .iter()
            .chain(&ml_system().schemas)
            .chain(&bridge_definitions())
        {
            if s.is_premise_free() {
                continue;
            }
            let mut prem = Vec::new();
            s.premises.iter().for_each(|p| p.collect_atoms(&mut prem));
            for v in s.conclusion.atoms() {
                assert!(prem.contains(&v), "{} {v}", s.name);
            }
        }
    }

    #[test]
    fn imports_resolve_lemmas() {
        let bl = bl_system()
            .with_imports(&["involution".to_string()])
            .unwrap();
        assert!(bl.schema("involution").is_some());
        assert_eq!(
            bl_system().with_imports(&["nope".to_string()]),
            Err("nope".to_string())
        );
    }
}
