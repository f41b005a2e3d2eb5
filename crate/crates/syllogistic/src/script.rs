//! Proof-script text format.
//!
//! ```text
//! -- comment
//! system LC
//! atoms s m p
//! import involution, compl-equals
//! P1: s&m=s
//! P2: m&p=m
//! C1: s&p=s
//! S3: s&(m&p)=s by eq P2 into P1 at 0.1 r2l
//! S4: s&(m&p)=(s&m)&p by axiom LC2 {b:=s, c:=m, d:=p}  -- split
//! ```
//!
//! Comments run from `--` to end of line. A step whose comment starts with
//! `split` is an auxiliary line of a decomposed proof step and is not
//! counted by [`Proof::step_count`]. Monadic statements are normalized to
//! their `!=0` / `=0` form.

use crate::kernel::{format_path, Binding, Justification, Line, LineId, Proof};
use crate::parse::{Cursor, ParseError};
use crate::systems::{system_by_name, SystemDef};
use std::collections::BTreeMap;

/// Effective schema set of a proof: its system plus its imports.
pub fn effective_system(proof: &Proof) -> Result<SystemDef, String> {
    let sys = system_by_name(&proof.system)
        .ok_or_else(|| format!("unknown system `{}`", proof.system))?;
    sys.with_imports(&proof.imports)
        .map_err(|n| format!("unknown lemma `{n}`"))
}

fn split_comment(raw: &str) -> (&str, Option<&str>) {
    match raw.find("--") {
        Some(i) => (&raw[..i], Some(raw[i + 2..].trim())),
        None => (raw, None),
    }
}

fn line_id(c: &mut Cursor<'_>) -> Option<LineId> {
    let w = c.word()?;
    let mut chars = w.chars();
    let prefix = chars.next()?;
    if !matches!(prefix, 'P' | 'S' | 'C') {
        return None;
    }
    let number = chars.as_str().parse().ok()?;
    Some(LineId::new(prefix, number))
}

fn expect_line_ref(c: &mut Cursor<'_>) -> Result<LineId, ParseError> {
    match line_id(c) {
        Some(id) if id.prefix != 'C' => Ok(id),
        _ => Err(c.error("expected a line reference such as P1 or S3")),
    }
}

fn justification(
    c: &mut Cursor<'_>,
) -> Result<(Justification, Option<(String, usize)>), ParseError> {
    let kw = c
        .word()
        .ok_or_else(|| c.error("expected `premise`, `axiom` or `eq`"))?;
    match kw.as_str() {
        "premise" => Ok((Justification::Premise, None)),
        "axiom" => {
            c.skip_ws();
            let name_col = c.column();
            let name = c.word().ok_or_else(|| c.error("expected a schema name"))?;
            c.expect("{")?;
            let mut binding = Binding::new();
            if !c.eat("}") {
                loop {
                    let var = c
                        .ident()
                        .ok_or_else(|| c.error("expected a schema variable"))?;
                    c.expect(":=")?;
                    let e = c.expr()?;
                    if binding.insert(var.clone(), e).is_some() {
                        return Err(c.error(format!("variable `{var}` bound twice")));
                    }
                    if c.eat("}") {
                        break;
                    }
                    c.expect(",")?;
                }
            }
            let mut reverse = false;
            let mut from = Vec::new();
            if c.eat("rev") {
                reverse = true;
            }
            if c.eat("from") {
                from.push(expect_line_ref(c)?);
                while c.eat(",") {
                    from.push(expect_line_ref(c)?);
                }
            }
            Ok((
                Justification::Schema {
                    name: name.clone(),
                    binding,
                    reverse,
                    from,
                },
                Some((name, name_col)),
            ))
        }
        "eq" => {
            let equation = expect_line_ref(c)?;
            if c.word().as_deref() != Some("into") {
                return Err(c.error("expected `into`"));
            }
            let target = expect_line_ref(c)?;
            if c.word().as_deref() != Some("at") {
                return Err(c.error("expected `at`"));
            }
            c.skip_ws();
            let mut path = Vec::new();
            loop {
                let w = c
                    .word()
                    .ok_or_else(|| c.error("expected a position path such as 0.1"))?;
                path.push(
                    w.parse::<usize>()
                        .map_err(|_| c.error("path components are child indices"))?,
                );
                if !c.eat(".") {
                    break;
                }
            }
            let r2l = if c.eat("r2l") {
                true
            } else {
                c.eat("l2r");
                false
            };
            Ok((
                Justification::Subst {
                    equation,
                    target,
                    path,
                    r2l,
                },
                None,
            ))
        }
        other => Err(c.error(format!("unknown justification `{other}`"))),
    }
}

/// Parses a script and checks that every cited schema exists in its system.
pub fn parse_script(text: &str) -> Result<Proof, ParseError> {
    let mut system: Option<String> = None;
    let mut signature: Option<Vec<String>> = None;
    let mut imports = Vec::new();
    let mut lines = Vec::new();
    let mut goals = Vec::new();
    let mut names: Vec<(String, usize, usize)> = Vec::new();
    let mut last_line = 1;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let (body, comment) = split_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let mut c = Cursor::new(body, lineno, 0);
        let head = c
            .word()
            .ok_or_else(|| c.error("expected a header keyword or line label"))?;
        match head.as_str() {
            "system" => {
                let name = c.word().ok_or_else(|| c.error("expected a system name"))?;
                if system_by_name(&name).is_none() {
                    return Err(c.error(format!("unknown system `{name}`")));
                }
                system = Some(name);
            }
            "atoms" => {
                let mut atoms = Vec::new();
                while let Some(a) = c.ident() {
                    if atoms.contains(&a) {
                        return Err(c.error(format!("atom `{a}` declared twice")));
                    }
                    atoms.push(a);
                }
                signature = Some(atoms);
            }
            "import" => loop {
                c.skip_ws();
                let col = c.column();
                let name = c.word().ok_or_else(|| c.error("expected a lemma name"))?;
                names.push((name.clone(), lineno, col));
                imports.push(name);
                if !c.eat(",") {
                    break;
                }
            },
            _ => {
                let mut lc = Cursor::new(&head, lineno, 0);
                let id = line_id(&mut lc)
                    .filter(|_| lc.at_end())
                    .ok_or_else(|| ParseError {
                        line: lineno,
                        column: 1,
                        message: format!("bad line label `{head}`"),
                    })?;
                c.expect(":")?;
                let stmt = c.statement()?.normalized();
                if id.prefix == 'C' {
                    goals.push((id, stmt));
                } else {
                    let just = if c.eat("by ") || c.eat("by\t") {
                        let (j, name) = justification(&mut c)?;
                        if let Some((n, col)) = name {
                            names.push((n, lineno, col));
                        }
                        j
                    } else if id.prefix == 'P' {
                        Justification::Premise
                    } else {
                        return Err(c.error("derived lines need `by <justification>`"));
                    };
                    let split = comment.is_some_and(|t| t.starts_with("split"));
                    let note = comment.filter(|t| !t.is_empty()).map(str::to_string);
                    lines.push(Line {
                        id,
                        stmt,
                        just,
                        split,
                        note,
                    });
                }
            }
        }
        if !c.at_end() {
            return Err(c.error(format!("unexpected trailing input `{}`", c.rest().trim())));
        }
    }

    let eof = |m: &str| ParseError {
        line: last_line,
        column: 1,
        message: m.to_string(),
    };
    let system = system.ok_or_else(|| eof("missing `system` header"))?;
    let signature = signature.ok_or_else(|| eof("missing `atoms` header"))?;
    let proof = Proof {
        system,
        signature,
        imports,
        lines,
        goals,
    };
    let sys = system_by_name(&proof.system).expect("validated above");
    let library = crate::systems::lemma_library();
    for (name, line, column) in names {
        if sys.schema(&name).is_none() && !library.iter().any(|l| l.name == name) {
            return Err(ParseError {
                line,
                column,
                message: format!("unknown schema `{name}`"),
            });
        }
    }
    let effective = effective_system(&proof).map_err(|m| eof(&m))?;
    for l in &proof.lines {
        if let Justification::Schema { name, .. } = &l.just {
            if effective.schema(name).is_none() {
                return Err(eof(&format!(
                    "{}: schema `{name}` is not in {} and not imported",
                    l.id, proof.system
                )));
            }
        }
    }
    Ok(proof)
}

fn binding_text(b: &Binding) -> String {
    let parts: Vec<String> = b.iter().map(|(k, v)| format!("{k}:={v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Canonical text of a justification, as accepted by [`parse_script`].
pub fn justification_text(j: &Justification) -> String {
    match j {
        Justification::Premise => "premise".to_string(),
        Justification::Schema {
            name,
            binding,
            reverse,
            from,
        } => {
            let mut s = format!("axiom {name} {}", binding_text(binding));
            if *reverse {
                s.push_str(" rev");
            }
            if !from.is_empty() {
                let ids: Vec<String> = from.iter().map(LineId::to_string).collect();
                s.push_str(&format!(" from {}", ids.join(", ")));
            }
            s
        }
        Justification::Subst {
            equation,
            target,
            path,
            r2l,
        } => {
            format!(
                "eq {equation} into {target} at {}{}",
                format_path(path),
                if *r2l { " r2l" } else { "" }
            )
        }
    }
}

/// Prints a proof in the script format. Premise lines come first, then
/// declared conclusions, then derived lines.
pub fn print_script(proof: &Proof, title: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(t) = title {
        out.push_str(&format!("-- {t}\n"));
    }
    out.push_str(&format!("system {}\n", proof.system));
    out.push_str(&format!("atoms {}\n", proof.signature.join(" ")));
    if !proof.imports.is_empty() {
        out.push_str(&format!("import {}\n", proof.imports.join(", ")));
    }
    let (premises, steps): (Vec<&Line>, Vec<&Line>) = proof
        .lines
        .iter()
        .partition(|l| l.just == Justification::Premise);
    let with_note = |s: String, l: &Line| match &l.note {
        Some(n) => format!("{s}  -- {n}\n"),
        None => format!("{s}\n"),
    };
    for l in premises {
        out.push_str(&with_note(format!("{}: {}", l.id, l.stmt), l));
    }
    for (id, g) in &proof.goals {
        out.push_str(&format!("{id}: {g}\n"));
    }
    for l in steps {
        out.push_str(&with_note(
            format!("{}: {} by {}", l.id, l.stmt, justification_text(&l.just)),
            l,
        ));
    }
    out
}

/// Bindings printed the way search tie-breaking compares them.
pub fn binding_key(b: &Binding) -> String {
    binding_text(b)
}

/// Line ids in a proof mapped to their statements, for tools.
pub fn line_map(proof: &Proof) -> BTreeMap<LineId, String> {
    proof
        .lines
        .iter()
        .map(|l| (l.id, l.stmt.to_string()))
        .collect()
}
