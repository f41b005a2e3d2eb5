//! Embedded proof corpus and the syllogism catalog.
//!
//! Scripts live under `corpus/` in this crate and are compiled in with
//! `include_str!`. Each entry records the axiom usage it is expected to
//! produce; for the 48 syllogism scripts that is the reference
//! syllogism-axiom matrix.

use crate::kernel::{check_proof, Proof, Violation};
use crate::modelcheck::{Oracle, HARD_MAX_ATOMS};
use crate::script::{effective_system, parse_script};
use crate::term::{CategoricalForm, FormKind, Statement};
use crate::translate::to_system;
use std::collections::BTreeSet;
use std::fmt;

/// One classic mood-figure pair over the role atoms `s`, `m`, `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllogismDef {
    pub name: &'static str,
    pub figure: u8,
    pub premises: [CategoricalForm; 2],
    pub existential: Option<CategoricalForm>,
    pub conclusions: Vec<CategoricalForm>,
}

impl SyllogismDef {
    /// Premises in script order: the two categorical premises, then the
    /// existential one if present.
    pub fn all_premises(&self) -> Vec<CategoricalForm> {
        let mut out = self.premises.to_vec();
        out.extend(self.existential.clone());
        out
    }

    /// Premises and conclusions as statements of `system` (`LC` or `ML`).
    pub fn lowered(&self, system: &str) -> (Vec<Statement>, Vec<Statement>) {
        let low = |f: &CategoricalForm| to_system(f, system).expect("catalog forms are classic");
        (
            self.all_premises().iter().map(low).collect(),
            self.conclusions.iter().map(low).collect(),
        )
    }
}

/// The 24 classic syllogisms, in matrix row order.
pub fn catalog() -> Vec<SyllogismDef> {
    use FormKind::*;
    let f = |k, s: &str, p: &str| CategoricalForm::new(k, s, p);
    let row = |name,
               premises: [CategoricalForm; 2],
               star: Option<&str>,
               conclusions: Vec<CategoricalForm>| {
        SyllogismDef {
            name,
            figure: name_figure(name),
            premises,
            existential: star.map(CategoricalForm::star),
            conclusions,
        }
    };
    vec![
        row(
            "Barbara-1",
            [f(A, "s", "m"), f(A, "m", "p")],
            None,
            vec![f(A, "s", "p")],
        ),
        row(
            "Barbari-1",
            [f(A, "s", "m"), f(A, "m", "p")],
            Some("s"),
            vec![f(A, "s", "p"), f(I, "s", "p")],
        ),
        row(
            "Celarent-1",
            [f(A, "s", "m"), f(E, "m", "p")],
            None,
            vec![f(E, "s", "p")],
        ),
        row(
            "Celaront-1",
            [f(A, "s", "m"), f(E, "m", "p")],
            Some("s"),
            vec![f(E, "s", "p"), f(O, "s", "p")],
        ),
        row(
            "Camestres-2",
            [f(E, "s", "m"), f(A, "p", "m")],
            None,
            vec![f(E, "s", "p")],
        ),
        row(
            "Camestros-2",
            [f(E, "s", "m"), f(A, "p", "m")],
            Some("s"),
            vec![f(E, "s", "p"), f(O, "s", "p")],
        ),
        row(
            "Bamalip-4",
            [f(A, "m", "s"), f(A, "p", "m")],
            Some("p"),
            vec![f(I, "s", "p")],
        ),
        row(
            "Darapti-3",
            [f(A, "m", "s"), f(A, "m", "p")],
            Some("m"),
            vec![f(I, "s", "p")],
        ),
        row(
            "Felapton-3",
            [f(A, "m", "s"), f(E, "m", "p")],
            Some("m"),
            vec![f(O, "s", "p")],
        ),
        row(
            "Disamis-3",
            [f(A, "m", "s"), f(I, "m", "p")],
            None,
            vec![f(I, "s", "p")],
        ),
        row(
            "Bokardo-3",
            [f(A, "m", "s"), f(O, "m", "p")],
            None,
            vec![f(O, "s", "p")],
        ),
        row(
            "Darii-1",
            [f(I, "s", "m"), f(A, "m", "p")],
            None,
            vec![f(I, "s", "p")],
        ),
        row(
            "Ferio-1",
            [f(I, "s", "m"), f(E, "m", "p")],
            None,
            vec![f(O, "s", "p")],
        ),
        row(
            "Baroko-2",
            [f(O, "s", "m"), f(A, "p", "m")],
            None,
            vec![f(O, "s", "p")],
        ),
        row(
            "Dimatis-4",
            [f(A, "m", "s"), f(I, "p", "m")],
            None,
            vec![f(I, "s", "p")],
        ),
        row(
            "Datisi-3",
            [f(I, "m", "s"), f(A, "m", "p")],
            None,
            vec![f(I, "s", "p")],
        ),
        row(
            "Ferison-3",
            [f(I, "m", "s"), f(E, "m", "p")],
            None,
            vec![f(O, "s", "p")],
        ),
        row(
            "Festino-2",
            [f(I, "s", "m"), f(E, "p", "m")],
            None,
            vec![f(O, "s", "p")],
        ),
        row(
            "Fresison-4",
            [f(I, "m", "s"), f(E, "p", "m")],
            None,
            vec![f(O, "s", "p")],
        ),
        row(
            "Fesapo-4",
            [f(A, "m", "s"), f(E, "p", "m")],
            Some("m"),
            vec![f(O, "s", "p")],
        ),
        row(
            "Cesare-2",
            [f(A, "s", "m"), f(E, "p", "m")],
            None,
            vec![f(E, "s", "p")],
        ),
        row(
            "Cesaro-2",
            [f(A, "s", "m"), f(E, "p", "m")],
            Some("s"),
            vec![f(E, "s", "p"), f(O, "s", "p")],
        ),
        row(
            "Calemes-4",
            [f(E, "m", "s"), f(A, "p", "m")],
            None,
            vec![f(E, "s", "p")],
        ),
        row(
            "Calemos-4",
            [f(E, "m", "s"), f(A, "p", "m")],
            Some("s"),
            vec![f(E, "s", "p"), f(O, "s", "p")],
        ),
    ]
}

fn name_figure(name: &str) -> u8 {
    name.rsplit('-')
        .next()
        .and_then(|d| d.parse().ok())
        .unwrap_or(0)
}

/// Matrix columns in reference order.
pub fn matrix_columns(system: &str) -> &'static [&'static str] {
    match system {
        "LC" => &["LC2", "LC3", "LC1", "LC5", "LC4"],
        "ML" => &["ML4", "ML5", "ML1", "ML3", "ML2"],
        _ => &[],
    }
}

/// The reference syllogism-axiom matrix for LC or ML, lemma usage expanded.
pub fn expected_matrix(system: &str) -> Vec<(&'static str, BTreeSet<String>)> {
    let rows: &[(&str, &[&str])] = match system {
        "LC" => &[
            ("Barbara-1", &["LC2"]),
            ("Barbari-1", &["LC2"]),
            ("Celarent-1", &["LC2"]),
            ("Celaront-1", &["LC2"]),
            ("Camestres-2", &["LC2", "LC4"]),
            ("Camestros-2", &["LC2", "LC4"]),
            ("Bamalip-4", &["LC2", "LC1"]),
            ("Darapti-3", &["LC2", "LC3"]),
            ("Felapton-3", &["LC2", "LC3"]),
            ("Disamis-3", &["LC2", "LC3"]),
            ("Bokardo-3", &["LC2", "LC3"]),
            ("Darii-1", &["LC2", "LC3", "LC1"]),
            ("Ferio-1", &["LC2", "LC3", "LC1"]),
            ("Baroko-2", &["LC2", "LC3", "LC1", "LC4"]),
            ("Dimatis-4", &["LC2", "LC3", "LC1"]),
            ("Datisi-3", &["LC2", "LC3", "LC1"]),
            ("Ferison-3", &["LC2", "LC3", "LC1"]),
            ("Festino-2", &["LC2", "LC3", "LC1", "LC5"]),
            ("Fresison-4", &["LC2", "LC3", "LC1", "LC5"]),
            ("Fesapo-4", &["LC2", "LC3", "LC5"]),
            ("Cesare-2", &["LC2", "LC5"]),
            ("Cesaro-2", &["LC2", "LC5"]),
            ("Calemes-4", &["LC2", "LC5"]),
            ("Calemos-4", &["LC2", "LC5"]),
        ],
        "ML" => &[
            ("Barbara-1", &["ML4"]),
            ("Barbari-1", &["ML4", "ML5"]),
            ("Celarent-1", &["ML4"]),
            ("Celaront-1", &["ML4", "ML5"]),
            ("Camestres-2", &["ML4", "ML2"]),
            ("Camestros-2", &["ML4", "ML5", "ML2"]),
            ("Bamalip-4", &["ML4", "ML5", "ML1"]),
            ("Darapti-3", &["ML5", "ML1"]),
            ("Felapton-3", &["ML5", "ML1"]),
            ("Disamis-3", &["ML5", "ML1"]),
            ("Bokardo-3", &["ML5", "ML1"]),
            ("Darii-1", &["ML5"]),
            ("Ferio-1", &["ML5"]),
            ("Baroko-2", &["ML5", "ML2"]),
            ("Dimatis-4", &["ML5", "ML1"]),
            ("Datisi-3", &["ML5", "ML1"]),
            ("Ferison-3", &["ML5", "ML1"]),
            ("Festino-2", &["ML5", "ML3"]),
            ("Fresison-4", &["ML5", "ML1", "ML3"]),
            ("Fesapo-4", &["ML5", "ML1", "ML3"]),
            ("Cesare-2", &["ML4", "ML3"]),
            ("Cesaro-2", &["ML4", "ML5", "ML3"]),
            ("Calemes-4", &["ML4", "ML3"]),
            ("Calemos-4", &["ML4", "ML5", "ML3"]),
        ],
        _ => &[],
    };
    rows.iter()
        .map(|(n, u)| (*n, u.iter().map(|s| s.to_string()).collect()))
        .collect()
}

/// What a corpus script establishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    /// A catalog syllogism in LC or ML.
    Syllogism,
    /// Derivation of a lemma schema; `reverse` for the right-to-left half
    /// of a bidirectional lemma.
    Lemma { name: &'static str, reverse: bool },
    /// BL derivation of an LC axiom (LC3 only up to contraposition).
    BlToLc { axiom: &'static str },
    /// LC+D derivation of an ML axiom.
    LcdToMl { axiom: &'static str },
    /// Any other theorem.
    Theorem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: &'static str,
    /// Mood name or schema name the script is about.
    pub name: &'static str,
    pub system: &'static str,
    pub kind: EntryKind,
    pub text: &'static str,
    pub expected_usage: BTreeSet<String>,
}

macro_rules! script {
    ($dir:literal, $file:literal) => {
        include_str!(concat!("../corpus/", $dir, "/", $file, ".proof"))
    };
}

const LC_SCRIPTS: [(&str, &str); 24] = [
    ("Barbara-1", script!("lc", "barbara-1")),
    ("Barbari-1", script!("lc", "barbari-1")),
    ("Celarent-1", script!("lc", "celarent-1")),
    ("Celaront-1", script!("lc", "celaront-1")),
    ("Camestres-2", script!("lc", "camestres-2")),
    ("Camestros-2", script!("lc", "camestros-2")),
    ("Bamalip-4", script!("lc", "bamalip-4")),
    ("Darapti-3", script!("lc", "darapti-3")),
    ("Felapton-3", script!("lc", "felapton-3")),
    ("Disamis-3", script!("lc", "disamis-3")),
    ("Bokardo-3", script!("lc", "bokardo-3")),
    ("Darii-1", script!("lc", "darii-1")),
    ("Ferio-1", script!("lc", "ferio-1")),
    ("Baroko-2", script!("lc", "baroko-2")),
    ("Dimatis-4", script!("lc", "dimatis-4")),
    ("Datisi-3", script!("lc", "datisi-3")),
    ("Ferison-3", script!("lc", "ferison-3")),
    ("Festino-2", script!("lc", "festino-2")),
    ("Fresison-4", script!("lc", "fresison-4")),
    ("Fesapo-4", script!("lc", "fesapo-4")),
    ("Cesare-2", script!("lc", "cesare-2")),
    ("Cesaro-2", script!("lc", "cesaro-2")),
    ("Calemes-4", script!("lc", "calemes-4")),
    ("Calemos-4", script!("lc", "calemos-4")),
];

const ML_SCRIPTS: [(&str, &str); 24] = [
    ("Barbara-1", script!("ml", "barbara-1")),
    ("Barbari-1", script!("ml", "barbari-1")),
    ("Celarent-1", script!("ml", "celarent-1")),
    ("Celaront-1", script!("ml", "celaront-1")),
    ("Camestres-2", script!("ml", "camestres-2")),
    ("Camestros-2", script!("ml", "camestros-2")),
    ("Bamalip-4", script!("ml", "bamalip-4")),
    ("Darapti-3", script!("ml", "darapti-3")),
    ("Felapton-3", script!("ml", "felapton-3")),
    ("Disamis-3", script!("ml", "disamis-3")),
    ("Bokardo-3", script!("ml", "bokardo-3")),
    ("Darii-1", script!("ml", "darii-1")),
    ("Ferio-1", script!("ml", "ferio-1")),
    ("Baroko-2", script!("ml", "baroko-2")),
    ("Dimatis-4", script!("ml", "dimatis-4")),
    ("Datisi-3", script!("ml", "datisi-3")),
    ("Ferison-3", script!("ml", "ferison-3")),
    ("Festino-2", script!("ml", "festino-2")),
    ("Fresison-4", script!("ml", "fresison-4")),
    ("Fesapo-4", script!("ml", "fesapo-4")),
    ("Cesare-2", script!("ml", "cesare-2")),
    ("Cesaro-2", script!("ml", "cesaro-2")),
    ("Calemes-4", script!("ml", "calemes-4")),
    ("Calemos-4", script!("ml", "calemos-4")),
];

fn set(names: &[&str]) -> BTreeSet<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Every embedded script, in report order.
pub fn all_scripts() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for (system, scripts, prefix) in [("LC", &LC_SCRIPTS, "lc"), ("ML", &ML_SCRIPTS, "ml")] {
        let matrix = expected_matrix(system);
        for ((name, text), (row, usage)) in scripts.iter().zip(matrix) {
            debug_assert_eq!(*name, row);
            let id: &'static str =
                Box::leak(format!("{prefix}/{}", name.to_lowercase()).into_boxed_str());
            out.push(CorpusEntry {
                id,
                name,
                system,
                kind: EntryKind::Syllogism,
                text,
                expected_usage: usage,
            });
        }
    }
    let lemma = |name, reverse| EntryKind::Lemma { name, reverse };
    let bl = ["assoc-meet", "compl-meet", "idem-meet"];
    let bl_join = ["assoc-join", "compl-join", "idem-join"];
    let involution = [
        "absorb-join",
        "comm-join",
        "comm-meet",
        "compl-join",
        "compl-meet",
        "dist-join",
        "dist-meet",
        "ident-join",
        "ident-meet",
    ];
    let with = |base: &[&str], extra: &[&str]| -> BTreeSet<String> {
        base.iter().chain(extra).map(|s| s.to_string()).collect()
    };
    let uniq1 = [
        "comm-meet",
        "compl-join",
        "compl-meet",
        "dist-meet",
        "ident-meet",
    ];
    let demorgan = with(
        &involution,
        &["assoc-join", "assoc-meet", "idem-join", "idem-meet"],
    );
    let all_bl = with(
        &involution,
        &[
            "absorb-meet",
            "assoc-join",
            "assoc-meet",
            "idem-join",
            "idem-meet",
        ],
    );
    let entry = |id, name, system, kind, text, expected_usage| CorpusEntry {
        id,
        name,
        system,
        kind,
        text,
        expected_usage,
    };
    let rest = [
        entry(
            "lemma/lc6",
            "LC6",
            "LC",
            lemma("LC6", false),
            script!("lemma", "lc6"),
            set(&["LC1", "LC3"]),
        ),
        entry(
            "lemma/ml6",
            "ML6",
            "ML",
            lemma("ML6", false),
            script!("lemma", "ml6"),
            set(&["ML1", "ML5"]),
        ),
        entry(
            "bl/dom-meet",
            "dom-meet",
            "BL",
            lemma("dom-meet", false),
            script!("bl", "dom-meet"),
            set(&bl),
        ),
        entry(
            "bl/dom-join",
            "dom-join",
            "BL",
            lemma("dom-join", false),
            script!("bl", "dom-join"),
            set(&bl_join),
        ),
        entry(
            "bl/subsumption",
            "subsumption",
            "BL",
            lemma("subsumption", false),
            script!("bl", "subsumption"),
            set(&["absorb-join", "comm-join", "comm-meet"]),
        ),
        entry(
            "bl/subsumption-rev",
            "subsumption",
            "BL",
            lemma("subsumption", true),
            script!("bl", "subsumption-rev"),
            set(&["absorb-meet"]),
        ),
        entry(
            "bl/subsup",
            "subsup",
            "BL",
            lemma("subsup", false),
            script!("bl", "subsup"),
            set(&["absorb-join", "comm-join", "comm-meet"]),
        ),
        entry(
            "bl/involution",
            "involution",
            "BL",
            lemma("involution", false),
            script!("bl", "involution"),
            set(&involution),
        ),
        entry(
            "bl/compl-equals",
            "compl-equals",
            "BL",
            lemma("compl-equals", false),
            script!("bl", "compl-equals"),
            set(&["ident-meet"]),
        ),
        entry(
            "bl/compl-equals-rev",
            "compl-equals",
            "BL",
            lemma("compl-equals", true),
            script!("bl", "compl-equals-rev"),
            set(&involution),
        ),
        entry(
            "bl/uniq-compl1",
            "uniq-compl1",
            "BL",
            lemma("uniq-compl1", false),
            script!("bl", "uniq-compl1"),
            set(&uniq1),
        ),
        entry(
            "bl/uniq-compl2",
            "uniq-compl2",
            "BL",
            lemma("uniq-compl2", false),
            script!("bl", "uniq-compl2"),
            set(&involution),
        ),
        entry(
            "bl/demorgan-meet",
            "demorgan-meet",
            "BL",
            lemma("demorgan-meet", false),
            script!("bl", "demorgan-meet"),
            demorgan.clone(),
        ),
        entry(
            "bl/demorgan-join",
            "demorgan-join",
            "BL",
            lemma("demorgan-join", false),
            script!("bl", "demorgan-join"),
            demorgan.clone(),
        ),
        entry(
            "bl-lc/lc3",
            "LC3",
            "BL",
            EntryKind::BlToLc { axiom: "LC3" },
            script!("bl-lc", "lc3"),
            set(&bl),
        ),
        entry(
            "bl-lc/lc4",
            "LC4",
            "BL",
            EntryKind::BlToLc { axiom: "LC4" },
            script!("bl-lc", "lc4"),
            all_bl.clone(),
        ),
        entry(
            "bl-lc/lc5",
            "LC5",
            "BL",
            EntryKind::BlToLc { axiom: "LC5" },
            script!("bl-lc", "lc5"),
            all_bl,
        ),
        entry(
            "lcd-ml/ml1",
            "ML1",
            "LC+D",
            EntryKind::LcdToMl { axiom: "ML1" },
            script!("lcd-ml", "ml1"),
            set(&["D2", "LC1"]),
        ),
        entry(
            "lcd-ml/ml2",
            "ML2",
            "LC+D",
            EntryKind::LcdToMl { axiom: "ML2" },
            script!("lcd-ml", "ml2"),
            set(&["D1", "LC4"]),
        ),
        entry(
            "lcd-ml/ml3",
            "ML3",
            "LC+D",
            EntryKind::LcdToMl { axiom: "ML3" },
            script!("lcd-ml", "ml3"),
            set(&["D1", "LC5"]),
        ),
        entry(
            "lcd-ml/ml4",
            "ML4",
            "LC+D",
            EntryKind::LcdToMl { axiom: "ML4" },
            script!("lcd-ml", "ml4"),
            set(&["D1", "LC2"]),
        ),
        entry(
            "lcd-ml/ml5",
            "ML5",
            "LC+D",
            EntryKind::LcdToMl { axiom: "ML5" },
            script!("lcd-ml", "ml5"),
            set(&["D1", "D2", "LC1", "LC2", "LC3"]),
        ),
        entry(
            "lcd-ml/glb",
            "greatest-lower-bound",
            "LC+D",
            EntryKind::Theorem,
            script!("lcd-ml", "glb"),
            set(&["D1", "LC2"]),
        ),
    ];
    out.extend(rest);
    out
}

/// Oracle outcome for one entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Valid,
    Invalid,
    /// Kernel rejected the script, so the oracle was not consulted.
    Skipped,
    Error(String),
}

impl fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleVerdict::Valid => f.write_str("valid"),
            OracleVerdict::Invalid => f.write_str("invalid"),
            OracleVerdict::Skipped => f.write_str("skipped"),
            OracleVerdict::Error(e) => write!(f, "error({e})"),
        }
    }
}

/// Result of checking one corpus entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryReport {
    pub id: String,
    pub system: String,
    pub ok: bool,
    pub usage: BTreeSet<String>,
    pub usage_matches: bool,
    pub oracle: OracleVerdict,
    pub steps: usize,
    pub failure: Option<String>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.ok && self.usage_matches && self.oracle == OracleVerdict::Valid
    }
}

pub fn usage_text(usage: &BTreeSet<String>) -> String {
    format!(
        "{{{}}}",
        usage.iter().cloned().collect::<Vec<_>>().join(", ")
    )
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<24} {:<5} {:<4} {} oracle={}",
            self.id,
            self.system,
            if self.ok { "ok" } else { "fail" },
            usage_text(&self.usage),
            self.oracle
        )?;
        if !self.usage_matches && self.ok {
            write!(f, " usage-mismatch")?;
        }
        if let Some(why) = &self.failure {
            write!(f, " [{why}]")?;
        }
        Ok(())
    }
}

/// Semantic check of every declared conclusion of a proof.
pub fn oracle_verdict(proof: &Proof) -> OracleVerdict {
    let oracle = Oracle::new(HARD_MAX_ATOMS);
    let premises: Vec<Statement> = proof.premises().into_iter().cloned().collect();
    for goal in proof.conclusions() {
        match oracle.valid_over(&proof.signature, &premises, goal) {
            Ok(r) if r.valid => {}
            Ok(_) => return OracleVerdict::Invalid,
            Err(e) => return OracleVerdict::Error(e.to_string()),
        }
    }
    OracleVerdict::Valid
}

fn fail_report(entry: &CorpusEntry, why: String) -> EntryReport {
    EntryReport {
        id: entry.id.to_string(),
        system: entry.system.to_string(),
        ok: false,
        usage: BTreeSet::new(),
        usage_matches: false,
        oracle: OracleVerdict::Skipped,
        steps: 0,
        failure: Some(why),
    }
}

/// Checks an arbitrary script text as if it were `entry`.
pub fn check_text(entry: &CorpusEntry, text: &str) -> EntryReport {
    let proof = match parse_script(text) {
        Ok(p) => p,
        Err(e) => return fail_report(entry, format!("parse {e}")),
    };
    let system = match effective_system(&proof) {
        Ok(s) => s,
        Err(e) => return fail_report(entry, e),
    };
    let verdict = check_proof(&proof, &system);
    let oracle = if verdict.ok {
        oracle_verdict(&proof)
    } else {
        OracleVerdict::Skipped
    };
    EntryReport {
        id: entry.id.to_string(),
        system: entry.system.to_string(),
        ok: verdict.ok,
        usage_matches: verdict.usage == entry.expected_usage,
        usage: verdict.usage,
        oracle,
        steps: proof.step_count(),
        failure: verdict.violation.as_ref().map(Violation::to_string),
    }
}

pub fn check_entry(entry: &CorpusEntry) -> EntryReport {
    check_text(entry, entry.text)
}

/// Checks every entry; failures are reported, never fatal.
pub fn check_all() -> Vec<EntryReport> {
    all_scripts().iter().map(check_entry).collect()
}

/// Golden-file rendering of a report: one line per entry plus a summary.
pub fn report_text(reports: &[EntryReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    for system in ["LC", "ML"] {
        let rows: Vec<&EntryReport> = reports
            .iter()
            .filter(|r| r.system == system && r.id.starts_with(&system.to_lowercase()))
            .collect();
        let ok = rows.iter().filter(|r| r.passed()).count();
        out.push_str(&format!("{system} syllogisms: {ok}/{} ok\n", rows.len()));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!(
        "total: {} entries, {failed} failed\n",
        reports.len()
    ));
    out
}

/// One row of a syllogism-axiom matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRow {
    pub name: String,
    pub usage: BTreeSet<String>,
    /// The proof cites the LC6 or ML6 lemma.
    pub uses_lemma: bool,
}

/// Checks the syllogism scripts of one system and returns one row per
/// mood. Any entry that does not check aborts with its report.
pub fn axiom_usage_matrix(system: &str) -> Result<Vec<MatrixRow>, Box<EntryReport>> {
    let mut rows = Vec::new();
    for entry in all_scripts()
        .iter()
        .filter(|e| e.system == system && e.kind == EntryKind::Syllogism)
    {
        let report = check_entry(entry);
        if !report.ok {
            return Err(Box::new(report));
        }
        let lemma = if system == "LC" { "LC6" } else { "ML6" };
        let uses_lemma = entry.text.contains(&format!("axiom {lemma} "));
        rows.push(MatrixRow {
            name: entry.name.to_string(),
            usage: report.usage,
            uses_lemma,
        });
    }
    Ok(rows)
}

/// Aligned text rendering of a syllogism-axiom matrix. Moods proved via
/// the subject-inhabitation or Disamis lemma carry a `*`.
pub fn matrix_text(system: &str, rows: &[MatrixRow]) -> String {
    let cols = matrix_columns(system);
    let width = rows
        .iter()
        .map(|r| r.name.len() + 1)
        .max()
        .unwrap_or(9)
        .max(9);
    let mut out = format!("{:<width$}", "Syllogism");
    for c in cols {
        out.push_str(&format!("  {c}"));
    }
    out.push('\n');
    for row in rows {
        let label = if row.uses_lemma {
            format!("{}*", row.name)
        } else {
            row.name.clone()
        };
        let mut line = format!("{label:<width$}");
        for c in cols {
            line.push_str(if row.usage.contains(*c) {
                "  x  "
            } else {
                "     "
            });
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Parses an entry's script. Corpus scripts always parse.
pub fn parsed(entry: &CorpusEntry) -> Proof {
    parse_script(entry.text).unwrap_or_else(|e| panic!("{}: {e}", entry.id))
}
