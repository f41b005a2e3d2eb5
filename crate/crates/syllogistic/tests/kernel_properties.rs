//! Property tests for the parser, the schemas and the kernel rules.

mod common;

use common::*;
use proptest::prelude::*;
use syllogistic::corpus::{all_scripts, parsed};
use syllogistic::kernel::{check_proof, instantiate, substitute_at, Binding};
use syllogistic::script::{effective_system, parse_script, print_script};
use syllogistic::systems::{
    bl_system, bridge_definitions, lc_system, lemma_library, ml_system, AxiomSchema,
};
use syllogistic::{parse_expr, parse_statement, Statement, TermExpr};

const BCD: &[&str] = &["b", "c", "d"];

fn every_schema() -> Vec<AxiomSchema> {
    let mut out = Vec::new();
    for sys in [lc_system(), ml_system(), bl_system()] {
        out.extend(sys.schemas);
    }
    out.extend(bridge_definitions());
    out.extend(lemma_library());
    out
}

fn assert_instance_sound(schema: &AxiomSchema, binding: &Binding) -> Result<(), TestCaseError> {
    let (premises, conclusion) = instantiate(schema, binding).unwrap();
    prop_assert!(
        entails(&premises, &conclusion),
        "{} {:?}",
        schema.name,
        binding
    );
    if schema.bidirectional {
        prop_assert!(
            entails(std::slice::from_ref(&conclusion), &premises[0]),
            "{} rev",
            schema.name
        );
    }
    Ok(())
}

proptest! {
    #[test]
    fn printed_expressions_reparse(e in arb_expr(BCD)) {
        prop_assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn printed_statements_reparse(s in arb_statement(BCD)) {
        prop_assert_eq!(parse_statement(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn schema_instances_are_sound(
        idx in 0usize..64,
        vals in proptest::collection::vec(arb_expr(BCD), 3),
    ) {
        let schemas = every_schema();
        let schema = &schemas[idx % schemas.len()];
        let binding: Binding = schema.vars().into_iter().zip(vals).collect();
        assert_instance_sound(schema, &binding)?;
    }

    #[test]
    fn substitution_of_equals_is_sound(
        target in arb_statement(BCD),
        pick in any::<prop::sample::Index>(),
        replacement in arb_expr(BCD),
    ) {
        let positions = target.positions();
        let (path, found) = positions[pick.index(positions.len())].clone();
        let found = found.clone();
        let result = substitute_at(&target, &path, &found, &replacement).unwrap();
        let eq = Statement::eq(found, replacement);
        prop_assert!(entails(&[eq, target.clone()], &result), "{} at {:?}", target, path);
    }

    #[test]
    fn accepted_mutants_stay_valid(entry in 0usize..71, line in any::<prop::sample::Index>(), s in arb_statement(&["s", "m", "p"])) {
        let entries = all_scripts();
        let entry = &entries[entry % entries.len()];
        let mut proof = parsed(entry);
        let i = line.index(proof.lines.len());
        proof.lines[i].stmt = s;
        let system = effective_system(&proof).unwrap();
        let verdict = check_proof(&proof, &system);
        if verdict.ok {
            let premises: Vec<Statement> = proof.premises().into_iter().cloned().collect();
            for goal in proof.conclusions() {
                let sig = proof.signature.clone();
                prop_assert!(entails_over(&sig, &premises, goal), "{} accepted invalid mutant", entry.id);
            }
        }
    }
}

#[test]
fn every_schema_is_sound_over_fresh_atoms() {
    for schema in every_schema() {
        let binding: Binding = schema
            .vars()
            .into_iter()
            .map(|v| (v.clone(), TermExpr::atom(&v)))
            .collect();
        assert_instance_sound(&schema, &binding).unwrap();
    }
}

#[test]
fn corpus_scripts_reprint_identically_modulo_comments() {
    for entry in all_scripts() {
        let proof = parsed(&entry);
        let again = parse_script(&print_script(&proof, Some(entry.name))).unwrap();
        assert_eq!(again, proof, "{}", entry.id);
    }
}

#[test]
fn kernel_rejects_each_single_line_deletion() {
    for entry in all_scripts() {
        let proof = parsed(&entry);
        let system = effective_system(&proof).unwrap();
        for i in 0..proof.lines.len() {
            let mut cut = proof.clone();
            cut.lines.remove(i);
            assert!(
                !check_proof(&cut, &system).ok,
                "{} still checks without line {}",
                entry.id,
                proof.lines[i].id
            );
        }
    }
}
