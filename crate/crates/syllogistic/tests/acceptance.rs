//! Acceptance suite: one PASS/FAIL line per criterion, thresholds pinned
//! below. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};
use syllogistic::corpus::{
    all_scripts, axiom_usage_matrix, catalog, check_entry, expected_matrix, parsed, EntryKind,
};
use syllogistic::kernel::{check_proof, instantiate, Binding};
use syllogistic::modelcheck::{holds, Oracle};
use syllogistic::search::{nonprovable_witness, prove, SearchConfig};
use syllogistic::systems::{bl_system, lc_system, ml_system, system_by_name};
use syllogistic::translate::{no_complement_row, table1_row, table2_derived, table2_row};
use syllogistic::{parse_statement, FormKind, MetaFormula, Statement, TermExpr};

const CORPUS_LIMIT: Duration = Duration::from_secs(1);
const SOUNDNESS_LIMIT: Duration = Duration::from_secs(5);
const EXISTENTIAL_LIMIT: Duration = Duration::from_secs(1);
const SEARCH_LIMIT: Duration = Duration::from_secs(60);
const SEARCH_DEPTH: usize = 7;
const WITNESS_DEPTH: usize = 6;
const WITNESS_SIZE: usize = 9;
const LC_STEP_BOUND: usize = 5;
const ML_STEP_BOUND: usize = 3;
const EXISTENTIAL_MOODS: [&str; 9] = [
    "Barbari-1",
    "Celaront-1",
    "Camestros-2",
    "Cesaro-2",
    "Calemos-4",
    "Bamalip-4",
    "Darapti-3",
    "Felapton-3",
    "Fesapo-4",
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    match result {
        Ok(detail) if elapsed < limit => Ok(format!("{detail}; {elapsed:.2?} < {limit:?}")),
        Ok(detail) => Err(format!("{detail}; {elapsed:.2?} exceeds {limit:?}")),
        Err(e) => Err(e),
    }
}

fn st(s: &str) -> Statement {
    parse_statement(s)
        .expect("fixed statement parses")
        .normalized()
}

fn corpus_completeness() -> Outcome {
    timed(CORPUS_LIMIT, || {
        let mut ok = [0usize; 2];
        for entry in all_scripts()
            .iter()
            .filter(|e| e.kind == EntryKind::Syllogism)
        {
            let report = check_entry(entry);
            if !report.ok {
                return Err(format!("{report}"));
            }
            ok[usize::from(entry.system == "ML")] += 1;
        }
        if ok != [24, 24] {
            return Err(format!("LC {}/24, ML {}/24", ok[0], ok[1]));
        }
        Ok("LC 24/24, ML 24/24 scripts check".to_string())
    })
}

fn matrix_reproduction() -> Outcome {
    let mut cells = 0;
    for system in ["LC", "ML"] {
        let rows = axiom_usage_matrix(system).map_err(|r| r.to_string())?;
        let expected = expected_matrix(system);
        if rows.len() != expected.len() {
            return Err(format!(
                "{system}: {} rows, expected {}",
                rows.len(),
                expected.len()
            ));
        }
        for (row, (want_name, want)) in rows.iter().zip(&expected) {
            if row.name != *want_name || &row.usage != want {
                return Err(format!(
                    "{system} {}: {:?} != {want:?}",
                    row.name, row.usage
                ));
            }
            cells += 5;
        }
    }
    Ok(format!("{cells} cells equal across both tables"))
}

fn padded(signature: &[String], to: usize) -> Vec<String> {
    let mut sig = signature.to_vec();
    let mut fresh = (0..).map(|i| format!("z{i}"));
    while sig.len() < to {
        sig.push(fresh.next().expect("infinite"));
    }
    sig
}

fn soundness_sweep() -> Outcome {
    timed(SOUNDNESS_LIMIT, || {
        let oracle = Oracle::new(3);
        let mut entries = 0;
        for entry in all_scripts() {
            let proof = parsed(&entry);
            let sig = padded(&proof.signature, 3);
            let premises: Vec<Statement> = proof.premises().into_iter().cloned().collect();
            for goal in proof.conclusions() {
                let report = oracle
                    .valid_over(&sig, &premises, goal)
                    .map_err(|e| e.to_string())?;
                if !report.valid || report.models_checked != 256 {
                    return Err(format!("{} not valid over 256 models", entry.id));
                }
            }
            entries += 1;
        }
        let mut schemas = 0;
        for sys in [lc_system(), ml_system(), bl_system()] {
            for schema in &sys.schemas {
                let binding: Binding = schema
                    .vars()
                    .into_iter()
                    .map(|v| (v.clone(), TermExpr::atom(&v)))
                    .collect();
                let (premises, conclusion) =
                    instantiate(schema, &binding).map_err(|e| e.to_string())?;
                let sig = schema.vars();
                let forward = oracle
                    .valid_over(&sig, &premises, &conclusion)
                    .map_err(|e| e.to_string())?;
                let backward = if schema.bidirectional {
                    oracle
                        .valid_over(&sig, std::slice::from_ref(&conclusion), &premises[0])
                        .map_err(|e| e.to_string())?
                        .valid
                } else {
                    true
                };
                if !forward.valid || !backward {
                    return Err(format!("{} {} unsound", sys.name, schema.name));
                }
                schemas += 1;
            }
        }
        Ok(format!(
            "{entries} corpus entries and {schemas} schemas sound"
        ))
    })
}

fn existential_boundary() -> Outcome {
    timed(EXISTENTIAL_LIMIT, || {
        let oracle = Oracle::new(3);
        let want: BTreeSet<&str> = EXISTENTIAL_MOODS.into_iter().collect();
        for system in ["LC", "ML"] {
            let mut flipped = BTreeSet::new();
            for def in catalog() {
                let (premises, conclusions) = def.lowered(system);
                for c in &conclusions {
                    let full = oracle.valid(&premises, c).map_err(|e| e.to_string())?;
                    if !full.valid {
                        return Err(format!("{system} {} invalid with all premises", def.name));
                    }
                }
                let goal = conclusions.last().expect("catalog rows have conclusions");
                let report = oracle
                    .valid(&premises[..2], goal)
                    .map_err(|e| e.to_string())?;
                if !report.valid {
                    let model = report.countermodel.ok_or("invalid without countermodel")?;
                    let genuine = premises[..2]
                        .iter()
                        .all(|p| holds(p, &model).unwrap_or(false))
                        && !holds(goal, &model).unwrap_or(true);
                    if !genuine {
                        return Err(format!("{system} {}: bad countermodel", def.name));
                    }
                    flipped.insert(def.name);
                }
            }
            if flipped != want {
                return Err(format!("{system}: flipped {flipped:?}"));
            }
        }
        Ok("9 moods flip with countermodels, 15 stay valid, in LC and ML".to_string())
    })
}

fn representation_sweep() -> Outcome {
    let oracle = Oracle::default();
    let eq = |a: &MetaFormula, b: &MetaFormula| oracle.equivalent(a, b).map_err(|e| e.to_string());
    let (mut t1, mut t2, mut nc) = (0, 0, 0);
    for kind in FormKind::RELATIONS {
        let row = table1_row(kind);
        let anchor = MetaFormula::from(row[0].stmt.clone());
        for cell in &row {
            if !eq(&anchor, &MetaFormula::from(cell.stmt.clone()))? {
                return Err(format!("table1 {kind:?}: {}", cell.stmt));
            }
            t1 += 1;
        }
        for f in table2_row(kind) {
            if !eq(&anchor, &f)? {
                return Err(format!("table2 {kind:?}: {f}"));
            }
            t2 += 1;
        }
        for s in table2_derived(kind)
            .into_iter()
            .chain(no_complement_row(kind))
        {
            if !eq(&anchor, &MetaFormula::from(s.clone()))? {
                return Err(format!("derived {kind:?}: {s}"));
            }
            nc += 1;
        }
    }
    if (t1, t2) != (96, 56) {
        return Err(format!("table sizes {t1}/{t2}"));
    }
    Ok(format!("{t1} + {t2} + {nc} entries equivalent within rows"))
}

fn hierarchy_derivations() -> Outcome {
    let mut ids = Vec::new();
    for entry in all_scripts() {
        if !matches!(
            entry.kind,
            EntryKind::BlToLc { .. } | EntryKind::LcdToMl { .. }
        ) && !(entry.system == "BL" && matches!(entry.kind, EntryKind::Lemma { .. }))
        {
            continue;
        }
        let report = check_entry(&entry);
        if !report.passed() {
            return Err(report.to_string());
        }
        ids.push(entry.id);
    }
    let need = [
        "bl-lc/lc3",
        "bl-lc/lc4",
        "bl-lc/lc5",
        "lcd-ml/ml1",
        "lcd-ml/ml2",
        "lcd-ml/ml3",
        "lcd-ml/ml4",
        "lcd-ml/ml5",
    ];
    if let Some(missing) = need.iter().find(|n| !ids.contains(n)) {
        return Err(format!("missing {missing}"));
    }
    Ok(format!(
        "{} scripts check (3 BL->LC, 5 LC+D->ML, {} BL theorems)",
        ids.len(),
        ids.len() - 8
    ))
}

fn separation_evidence() -> Outcome {
    let config = SearchConfig {
        depth: WITNESS_DEPTH,
        size_limit: WITNESS_SIZE,
        ..SearchConfig::default()
    };
    let cases = [
        ("ML", vec![st("b#c")], st("c#c")),
        ("LC", vec![], st("b''=b")),
        ("LC", vec![], st("b&b=b")),
    ];
    let mut counts = Vec::new();
    for (system, premises, goal) in cases {
        let sys = system_by_name(system).ok_or("unknown system")?;
        let first = nonprovable_witness(&premises, &goal, &sys, &config)
            .map_err(|e| format!("{system} {goal}: {e}"))?;
        let again =
            nonprovable_witness(&premises, &goal, &sys, &config).map_err(|e| e.to_string())?;
        if first.to_string() != again.to_string() {
            return Err(format!("{system} {goal}: certificate not reproducible"));
        }
        if first.depth_limit < WITNESS_DEPTH || first.size_limit < WITNESS_SIZE {
            return Err("certificate limits below threshold".to_string());
        }
        counts.push(format!("{system} {goal}: {} statements", first.statements));
    }
    Ok(format!(
        "depth {WITNESS_DEPTH}, size {WITNESS_SIZE}: {}",
        counts.join(", ")
    ))
}

fn search_reconstruction() -> Outcome {
    timed(SEARCH_LIMIT, || {
        let config = SearchConfig {
            depth: SEARCH_DEPTH,
            ..SearchConfig::default()
        };
        let mut found = 0;
        for system in ["LC", "ML"] {
            let sys = system_by_name(system).ok_or("unknown system")?;
            for def in catalog() {
                let (premises, conclusions) = def.lowered(system);
                for goal in &conclusions {
                    let proof = prove(&premises, goal, &sys, &config)
                        .map_err(|e| format!("{system} {}: {e}", def.name))?;
                    if !check_proof(&proof, &sys).ok {
                        return Err(format!(
                            "{system} {}: kernel rejects search output",
                            def.name
                        ));
                    }
                    found += 1;
                }
            }
        }
        Ok(format!(
            "{found} conclusions of 48 syllogisms proved within depth {SEARCH_DEPTH}"
        ))
    })
}

fn proof_length_bounds() -> Outcome {
    let mut worst = [0usize; 2];
    for entry in all_scripts()
        .iter()
        .filter(|e| e.kind == EntryKind::Syllogism)
    {
        let steps = parsed(entry).step_count();
        let (slot, bound) = if entry.system == "LC" {
            (0, LC_STEP_BOUND)
        } else {
            (1, ML_STEP_BOUND)
        };
        if steps > bound {
            return Err(format!("{} has {steps} steps, bound {bound}", entry.id));
        }
        worst[slot] = worst[slot].max(steps);
    }
    Ok(format!(
        "max LC {} <= {LC_STEP_BOUND}, max ML {} <= {ML_STEP_BOUND}",
        worst[0], worst[1]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("corpus completeness", corpus_completeness),
        ("matrix reproduction", matrix_reproduction),
        ("semantic soundness sweep", soundness_sweep),
        ("existential-import boundary", existential_boundary),
        ("representation sweep", representation_sweep),
        ("hierarchy derivations", hierarchy_derivations),
        ("separation evidence", separation_evidence),
        ("search reconstruction", search_reconstruction),
        ("proof-length bounds", proof_length_bounds),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
