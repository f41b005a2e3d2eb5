//! Bounded proof search.
//!
//! Uniform-cost forward search over derived statements. The cost of a
//! statement is the number of derived steps in its derivation (the union of
//! its ancestors plus itself); a rewrite by a premise-free equation counts
//! as one step even though it prints as an instance line plus a
//! substitution line. Candidates are queued by `(cost, insertion order)`
//! and candidate batches are sorted by rule, binding, position and
//! statement text, so the search is deterministic. The kernel re-checks
//! every proof that leaves this module.

use crate::kernel::{
    check_proof, fill, fill_statement, instantiate, Binding, Justification, Line, LineId, Proof,
};
use crate::script::binding_key;
use crate::systems::{AxiomSchema, SystemDef};
use crate::term::{RelKind, Statement, TermExpr};
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};
use std::fmt;
use thiserror::Error;

/// Limits of one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of derived steps in a proof.
    pub depth: usize,
    /// Maximum node count of any generated statement.
    pub size_limit: usize,
    /// Cap on distinct finalized statements before giving up.
    pub max_statements: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            depth: 7,
            size_limit: 9,
            max_statements: 200_000,
        }
    }
}

/// Record of a bounded search that closed its space without the goal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustionCertificate {
    pub system: String,
    pub premises: Vec<Statement>,
    pub goal: Statement,
    pub depth_limit: usize,
    pub size_limit: usize,
    /// Largest cost among finalized statements.
    pub depth_reached: usize,
    /// Distinct statements finalized, premises included.
    pub statements: usize,
}

impl fmt::Display for ExhaustionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let premises: Vec<String> = self.premises.iter().map(ToString::to_string).collect();
        writeln!(f, "exhaustion certificate")?;
        writeln!(f, "system: {}", self.system)?;
        writeln!(
            f,
            "premises: {}",
            if premises.is_empty() {
                "(none)".to_string()
            } else {
                premises.join(", ")
            }
        )?;
        writeln!(f, "goal: {}", self.goal)?;
        writeln!(f, "depth-limit: {}", self.depth_limit)?;
        writeln!(f, "size-limit: {}", self.size_limit)?;
        writeln!(f, "depth-reached: {}", self.depth_reached)?;
        writeln!(f, "statements: {}", self.statements)?;
        writeln!(f, "goal not among generated statements")?;
        write!(f, "bounded non-provability only")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("no proof within limits\n{0}")]
    NotFound(Box<ExhaustionCertificate>),
    #[error(
        "resource limit: more than {limit} statements generated (depth reached {depth_reached})"
    )]
    ResourceLimit { limit: usize, depth_reached: usize },
    #[error("goal is derivable within limits")]
    Provable(Box<Proof>),
    #[error("limits must be at least 1")]
    BadConfig,
    #[error("search produced a proof the kernel rejects: {0}")]
    KernelRejected(String),
}

/// How a node was derived.
#[derive(Debug, Clone)]
enum Deriv {
    Premise,
    /// Premise-free schema instance.
    Instance {
        schema: String,
        binding: Binding,
    },
    Apply {
        schema: String,
        binding: Binding,
        reverse: bool,
        from: Vec<usize>,
    },
    /// Rewrite of `target` by an instance `lhs=rhs` of a premise-free
    /// equation schema.
    Rewrite {
        schema: String,
        binding: Binding,
        instance: Statement,
        target: usize,
        path: Vec<usize>,
        r2l: bool,
    },
    Subst {
        equation: usize,
        target: usize,
        path: Vec<usize>,
        r2l: bool,
    },
}

#[derive(Debug, Clone)]
struct Node {
    stmt: Statement,
    deriv: Deriv,
    /// Sorted indices of derived ancestor nodes, self excluded.
    ancestors: Vec<usize>,
}

impl Node {
    fn cost(&self) -> usize {
        self.ancestors.len() + usize::from(!matches!(self.deriv, Deriv::Premise))
    }
}

/// Candidate sort key: rule, binding print, position path, statement print.
type SortKey = (String, String, Vec<usize>, String);

/// Extends `b` so that `pat` filled with `b` equals `e`.
fn match_expr(pat: &TermExpr, e: &TermExpr, b: &mut Binding) -> bool {
    match (pat, e) {
        (TermExpr::Atom(v), _) => match b.get(v) {
            Some(bound) => bound == e,
            None => {
                b.insert(v.clone(), e.clone());
                true
            }
        },
        (TermExpr::Complement(p), TermExpr::Complement(x)) => match_expr(p, x, b),
        (TermExpr::Meet(pl, pr), TermExpr::Meet(l, r))
        | (TermExpr::Join(pl, pr), TermExpr::Join(l, r)) => {
            match_expr(pl, l, b) && match_expr(pr, r, b)
        }
        (TermExpr::Empty, TermExpr::Empty) | (TermExpr::Universe, TermExpr::Universe) => true,
        _ => false,
    }
}

fn match_stmt(pat: &Statement, s: &Statement, b: &mut Binding) -> bool {
    match (pat, s) {
        (
            Statement::Dyadic {
                rel: pr,
                lhs: pl,
                rhs: prr,
            },
            Statement::Dyadic { rel, lhs, rhs },
        ) => pr == rel && match_expr(pl, lhs, b) && match_expr(prr, rhs, b),
        (
            Statement::Monadic {
                mark: pm,
                subject: ps,
            },
            Statement::Monadic { mark, subject },
        ) => pm == mark && match_expr(ps, subject, b),
        _ => false,
    }
}

/// All completions of `b` over `vars` with values from `pool`.
fn complete(b: &Binding, vars: &[String], pool: &[TermExpr]) -> Vec<Binding> {
    let mut out = vec![b.clone()];
    for v in vars.iter().filter(|v| !b.contains_key(*v)) {
        out = out
            .into_iter()
            .flat_map(|partial| {
                pool.iter().map(move |e| {
                    let mut next = partial.clone();
                    next.insert(v.clone(), e.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Directed view of a schema: premises, conclusion and the reverse flag.
struct Direction<'a> {
    schema: &'a AxiomSchema,
    premises: Vec<&'a Statement>,
    conclusion: &'a Statement,
    reverse: bool,
}

fn directions(system: &SystemDef) -> Vec<Direction<'_>> {
    let mut out = Vec::new();
    for schema in &system.schemas {
        if schema.premises.is_empty() {
            continue;
        }
        out.push(Direction {
            schema,
            premises: schema.premises.iter().collect(),
            conclusion: &schema.conclusion,
            reverse: false,
        });
        if schema.bidirectional {
            out.push(Direction {
                schema,
                premises: vec![&schema.conclusion],
                conclusion: &schema.premises[0],
                reverse: true,
            });
        }
    }
    out
}

/// Premise-free equation schemas as `(schema, lhs, rhs)`.
fn equations(system: &SystemDef) -> Vec<(&AxiomSchema, &TermExpr, &TermExpr)> {
    system
        .schemas
        .iter()
        .filter(|s| s.premises.is_empty())
        .filter_map(|s| match &s.conclusion {
            Statement::Dyadic {
                rel: RelKind::Eq,
                lhs,
                rhs,
            } => Some((s, lhs, rhs)),
            _ => None,
        })
        .collect()
}

/// Binding pool: subexpressions of the premises and goal, plus one
/// complement layer, in sorted order.
fn binding_pool(premises: &[Statement], goal: &Statement) -> Vec<TermExpr> {
    let mut set = BTreeSet::new();
    for s in premises.iter().chain(std::iter::once(goal)) {
        for (_, e) in s.positions() {
            set.insert(e.clone());
        }
    }
    let complements: Vec<TermExpr> = set
        .iter()
        .map(|e| TermExpr::complement(e.clone()))
        .collect();
    set.extend(complements);
    set.into_iter().collect()
}

fn merge(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

struct Search<'a> {
    system: &'a SystemDef,
    config: SearchConfig,
    goal: Statement,
    pool: Vec<TermExpr>,
    directions: Vec<Direction<'a>>,
    equations: Vec<(&'a AxiomSchema, &'a TermExpr, &'a TermExpr)>,
    nodes: Vec<Node>,
    finalized: HashMap<Statement, usize>,
    best_pending: HashMap<Statement, usize>,
    heap: BinaryHeap<Reverse<(usize, u64)>>,
    pending: HashMap<u64, Node>,
    counter: u64,
}

enum Outcome {
    Found(usize),
    Exhausted,
}

impl<'a> Search<'a> {
    fn new(
        system: &'a SystemDef,
        premises: &[Statement],
        goal: &Statement,
        config: SearchConfig,
    ) -> Self {
        Search {
            system,
            config,
            goal: goal.clone(),
            pool: binding_pool(premises, goal),
            directions: directions(system),
            equations: equations(system),
            nodes: Vec::new(),
            finalized: HashMap::new(),
            best_pending: HashMap::new(),
            heap: BinaryHeap::new(),
            pending: HashMap::new(),
            counter: 0,
        }
    }

    fn ancestry(&self, parents: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for &p in parents {
            let n = &self.nodes[p];
            let own: &[usize] = if matches!(n.deriv, Deriv::Premise) {
                &[]
            } else {
                std::slice::from_ref(&p)
            };
            out = merge(&out, &merge(&n.ancestors, own));
        }
        out
    }

    /// Queues a sorted batch of candidates.
    fn push_batch(&mut self, mut batch: Vec<(SortKey, Node)>) {
        batch.sort_by(|a, b| a.0.cmp(&b.0));
        for (_, node) in batch {
            let cost = node.cost();
            if cost > self.config.depth || node.stmt.size() > self.config.size_limit {
                continue;
            }
            if self.finalized.contains_key(&node.stmt) {
                continue;
            }
            if self
                .best_pending
                .get(&node.stmt)
                .is_some_and(|&c| c <= cost)
            {
                continue;
            }
            self.best_pending.insert(node.stmt.clone(), cost);
            self.heap.push(Reverse((cost, self.counter)));
            self.pending.insert(self.counter, node);
            self.counter += 1;
        }
    }

    fn seed(&mut self, premises: &[Statement]) {
        for p in premises {
            if !self.finalized.contains_key(p) {
                self.finalize(Node {
                    stmt: p.clone(),
                    deriv: Deriv::Premise,
                    ancestors: Vec::new(),
                });
            }
        }
        let mut seeds = Vec::new();
        for schema in self.system.schemas.iter().filter(|s| s.premises.is_empty()) {
            let mut bindings = Vec::new();
            let mut goal_binding = Binding::new();
            if match_stmt(&schema.conclusion, &self.goal, &mut goal_binding) {
                bindings.extend(complete(&goal_binding, &schema.vars(), &self.pool));
            }
            if premises.is_empty() {
                bindings.extend(complete(&Binding::new(), &schema.vars(), &self.pool));
            }
            for binding in bindings {
                let Ok((_, stmt)) = instantiate(schema, &binding) else {
                    continue;
                };
                let key = (
                    schema.name.clone(),
                    binding_key(&binding),
                    Vec::new(),
                    stmt.to_string(),
                );
                seeds.push((
                    key,
                    Node {
                        stmt,
                        deriv: Deriv::Instance {
                            schema: schema.name.clone(),
                            binding,
                        },
                        ancestors: Vec::new(),
                    },
                ));
            }
        }
        self.push_batch(seeds);
    }

    fn finalize(&mut self, node: Node) -> usize {
        let idx = self.nodes.len();
        self.finalized.insert(node.stmt.clone(), idx);
        self.nodes.push(node);
        idx
    }

    /// Candidates combining node `n` with the finalized nodes.
    fn expand(&self, n: usize) -> Vec<(SortKey, Node)> {
        let mut out = Vec::new();
        let stmt = &self.nodes[n].stmt;
        let count = self.nodes.len();

        for d in &self.directions {
            let mut assignments: Vec<Vec<usize>> = Vec::new();
            match d.premises.len() {
                1 => assignments.push(vec![n]),
                2 => {
                    for other in 0..count {
                        assignments.push(vec![n, other]);
                        if other != n {
                            assignments.push(vec![other, n]);
                        }
                    }
                }
                _ => {}
            }
            let own_slot_fits = |slot: usize| {
                let mut b = Binding::new();
                match_stmt(d.premises[slot], stmt, &mut b)
            };
            let fits: Vec<bool> = (0..d.premises.len()).map(own_slot_fits).collect();
            for slots in assignments {
                if !slots.iter().enumerate().any(|(j, &i)| i == n && fits[j]) {
                    continue;
                }
                let mut b = Binding::new();
                if !slots
                    .iter()
                    .zip(&d.premises)
                    .all(|(&i, p)| match_stmt(p, &self.nodes[i].stmt, &mut b))
                {
                    continue;
                }
                for binding in complete(&b, &d.schema.vars(), &self.pool) {
                    let concl = fill_statement(d.conclusion, &binding);
                    let name = if d.reverse {
                        format!("{} rev", d.schema.name)
                    } else {
                        d.schema.name.clone()
                    };
                    let key = (
                        name,
                        binding_key(&binding),
                        slots.clone(),
                        concl.to_string(),
                    );
                    let node = Node {
                        stmt: concl,
                        deriv: Deriv::Apply {
                            schema: d.schema.name.clone(),
                            binding,
                            reverse: d.reverse,
                            from: slots.clone(),
                        },
                        ancestors: self.ancestry(&slots),
                    };
                    out.push((key, node));
                }
            }
        }

        for (path, sub) in stmt.positions() {
            for (schema, lhs, rhs) in &self.equations {
                for (from, to, r2l) in [(lhs, rhs, false), (rhs, lhs, true)] {
                    let mut b = Binding::new();
                    if !match_expr(from, sub, &mut b) {
                        continue;
                    }
                    for binding in complete(&b, &schema.vars(), &self.pool) {
                        let Ok((_, instance)) = instantiate(schema, &binding) else {
                            continue;
                        };
                        let new_sub = fill(to, &binding);
                        if &new_sub == sub {
                            continue;
                        }
                        let Some(result) = stmt.replaced_at(&path, new_sub) else {
                            continue;
                        };
                        let key = (
                            format!("{}{}", schema.name, if r2l { " r2l" } else { "" }),
                            binding_key(&binding),
                            path.clone(),
                            result.to_string(),
                        );
                        let node = Node {
                            stmt: result,
                            deriv: Deriv::Rewrite {
                                schema: schema.name.clone(),
                                binding,
                                instance,
                                target: n,
                                path: path.clone(),
                                r2l,
                            },
                            ancestors: self.ancestry(&[n]),
                        };
                        out.push((key, node));
                    }
                }
            }
        }

        let mut subst = |eq: usize, target: usize| {
            let Statement::Dyadic {
                rel: RelKind::Eq,
                lhs,
                rhs,
            } = &self.nodes[eq].stmt
            else {
                return;
            };
            if lhs == rhs {
                return;
            }
            let tgt = &self.nodes[target].stmt;
            for (path, sub) in tgt.positions() {
                for (from, to, r2l) in [(lhs, rhs, false), (rhs, lhs, true)] {
                    if sub != from {
                        continue;
                    }
                    let Some(result) = tgt.replaced_at(&path, to.clone()) else {
                        continue;
                    };
                    let key = (
                        format!("eq{}", if r2l { " r2l" } else { "" }),
                        format!("{eq}>{target}"),
                        path.clone(),
                        result.to_string(),
                    );
                    let node = Node {
                        stmt: result,
                        deriv: Deriv::Subst {
                            equation: eq,
                            target,
                            path: path.clone(),
                            r2l,
                        },
                        ancestors: self.ancestry(&[eq, target]),
                    };
                    out.push((key, node));
                }
            }
        };
        for other in 0..count {
            subst(n, other);
            if other != n {
                subst(other, n);
            }
        }
        out
    }

    fn run(&mut self) -> Result<Outcome, SearchError> {
        if let Some(&i) = self.finalized.get(&self.goal) {
            return Ok(Outcome::Found(i));
        }
        for n in 0..self.nodes.len() {
            let batch = self.expand(n);
            self.push_batch(batch);
        }
        while let Some(Reverse((_, id))) = self.heap.pop() {
            let node = self.pending.remove(&id).expect("queued node");
            if self.finalized.contains_key(&node.stmt) {
                continue;
            }
            let is_goal = node.stmt == self.goal;
            let idx = self.finalize(node);
            if is_goal {
                return Ok(Outcome::Found(idx));
            }
            if self.nodes.len() > self.config.max_statements {
                return Err(SearchError::ResourceLimit {
                    limit: self.config.max_statements,
                    depth_reached: self.depth_reached(),
                });
            }
            let batch = self.expand(idx);
            self.push_batch(batch);
        }
        Ok(Outcome::Exhausted)
    }

    fn depth_reached(&self) -> usize {
        self.nodes.iter().map(Node::cost).max().unwrap_or(0)
    }

    fn certificate(&self, premises: &[Statement]) -> ExhaustionCertificate {
        ExhaustionCertificate {
            system: self.system.name.clone(),
            premises: premises.to_vec(),
            goal: self.goal.clone(),
            depth_limit: self.config.depth,
            size_limit: self.config.size_limit,
            depth_reached: self.depth_reached(),
            statements: self.nodes.len(),
        }
    }

    /// Proof text for the derivation of node `goal`.
    fn proof(&self, premises: &[Statement], goal: usize) -> Proof {
        let mut lines = Vec::new();
        let mut number: HashMap<usize, LineId> = HashMap::new();
        for (i, p) in premises.iter().enumerate() {
            let id = LineId::new('P', i as u32 + 1);
            lines.push(Line {
                id,
                stmt: p.clone(),
                just: Justification::Premise,
                split: false,
                note: None,
            });
            if let Some(&n) = self.finalized.get(p) {
                number.entry(n).or_insert(id);
            }
        }
        let mut next = premises.len() as u32 + 1;
        let mut order = self.nodes[goal].ancestors.clone();
        if !matches!(self.nodes[goal].deriv, Deriv::Premise) {
            order.push(goal);
        }
        for n in order {
            let node = &self.nodes[n];
            let cite = |i: &usize| number[i];
            let just = match &node.deriv {
                Deriv::Premise => continue,
                Deriv::Instance { schema, binding } => Justification::Schema {
                    name: schema.clone(),
                    binding: binding.clone(),
                    reverse: false,
                    from: Vec::new(),
                },
                Deriv::Apply {
                    schema,
                    binding,
                    reverse,
                    from,
                } => Justification::Schema {
                    name: schema.clone(),
                    binding: binding.clone(),
                    reverse: *reverse,
                    from: from.iter().map(cite).collect(),
                },
                Deriv::Rewrite {
                    schema,
                    binding,
                    instance,
                    target,
                    path,
                    r2l,
                } => {
                    let id = LineId::new('S', next);
                    next += 1;
                    let just = Justification::Schema {
                        name: schema.clone(),
                        binding: binding.clone(),
                        reverse: false,
                        from: Vec::new(),
                    };
                    lines.push(Line {
                        id,
                        stmt: instance.clone(),
                        just,
                        split: true,
                        note: Some("split".to_string()),
                    });
                    Justification::Subst {
                        equation: id,
                        target: cite(target),
                        path: path.clone(),
                        r2l: *r2l,
                    }
                }
                Deriv::Subst {
                    equation,
                    target,
                    path,
                    r2l,
                } => Justification::Subst {
                    equation: cite(equation),
                    target: cite(target),
                    path: path.clone(),
                    r2l: *r2l,
                },
            };
            let id = LineId::new('S', next);
            next += 1;
            number.insert(n, id);
            lines.push(Line {
                id,
                stmt: node.stmt.clone(),
                just,
                split: false,
                note: None,
            });
        }
        let mut signature = Vec::new();
        premises
            .iter()
            .for_each(|p| p.collect_atoms(&mut signature));
        self.goal.collect_atoms(&mut signature);
        Proof {
            system: self.system.name.clone(),
            signature,
            imports: Vec::new(),
            lines,
            goals: vec![(LineId::new('C', 1), self.goal.clone())],
        }
    }
}

fn normalized(premises: &[Statement], goal: &Statement) -> (Vec<Statement>, Statement) {
    (
        premises
            .iter()
            .cloned()
            .map(Statement::normalized)
            .collect(),
        goal.clone().normalized(),
    )
}

fn validate(config: &SearchConfig) -> Result<(), SearchError> {
    if config.depth == 0 || config.size_limit == 0 || config.max_statements == 0 {
        return Err(SearchError::BadConfig);
    }
    Ok(())
}

/// Searches for a proof of `goal` from `premises`. Any proof returned has
/// passed [`check_proof`].
pub fn prove(
    premises: &[Statement],
    goal: &Statement,
    system: &SystemDef,
    config: &SearchConfig,
) -> Result<Proof, SearchError> {
    validate(config)?;
    let (premises, goal) = normalized(premises, goal);
    let mut search = Search::new(system, &premises, &goal, *config);
    search.seed(&premises);
    match search.run()? {
        Outcome::Found(idx) => {
            let proof = search.proof(&premises, idx);
            let verdict = check_proof(&proof, system);
            match verdict.violation {
                None => Ok(proof),
                Some(v) => Err(SearchError::KernelRejected(v.to_string())),
            }
        }
        Outcome::Exhausted => Err(SearchError::NotFound(Box::new(
            search.certificate(&premises),
        ))),
    }
}

/// Closes the bounded search space and certifies that `goal` is not in it.
/// This is evidence of non-provability within the limits, nothing more.
pub fn nonprovable_witness(
    premises: &[Statement],
    goal: &Statement,
    system: &SystemDef,
    config: &SearchConfig,
) -> Result<ExhaustionCertificate, SearchError> {
    match prove(premises, goal, system, config) {
        Ok(proof) => Err(SearchError::Provable(Box::new(proof))),
        Err(SearchError::NotFound(cert)) => Ok(*cert),
        Err(e) => Err(e),
    }
}
