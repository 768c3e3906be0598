use std::collections::BTreeSet;
use std::time::Instant;

use serde_json::{json, Value};

use qgcat::category::{free_product_table, glue_table, mor_space, ExtCutoffs, FixTable};
use qgcat::presentation::relations_from_intertwiner;
use qgcat::transforms::*;
use qgcat::words::Word;
use qgcat::Error;

use crate::report;
use crate::spec::{Generator, QGSpec};
use crate::{Cli, Cmd, Failure, Predicate, Product, Theorem};

fn load(cli: &Cli) -> Result<QGSpec, Failure> {
    let mut spec = match (&cli.spec, &cli.preset) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            QGSpec::parse(&text)?
        }
        (None, Some(name)) => QGSpec::from_preset(name, cli.n)?,
        (None, None) => return Err(Error::Parse("give --spec FILE or --preset NAME".into()).into()),
    };
    if let Some(r) = cli.cutoff {
        spec.cutoffs.report = r;
        spec.cutoffs.work = spec.cutoffs.work.max(r);
    }
    if let Some(w) = cli.work {
        spec.cutoffs.work = w;
    }
    Ok(spec)
}

/// The effective spec in canonical form; its digest identifies the input.
fn spec_value(s: &QGSpec) -> Value {
    let text = |w: &Word| w.to_string();
    let gens: Vec<Value> = s
        .generators
        .iter()
        .map(|g| match g {
            Generator::Partition {
                upper,
                lower,
                blocks,
            } => json!({"kind": "partition", "upper": text(&upper.0), "lower": text(&lower.0), "blocks": blocks}),
            Generator::Matrix {
                domain,
                codomain,
                entries,
            } => {
                let rows: Vec<Vec<String>> = entries
                    .iter()
                    .map(|r| r.iter().map(|x| x.0.to_string()).collect())
                    .collect();
                json!({"kind": "matrix", "domain": text(&domain.0), "codomain": text(&codomain.0), "entries": rows})
            }
        })
        .collect();
    let f = s.f.as_ref().map(|rows| {
        rows.iter()
            .map(|r| r.iter().map(|x| x.0.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    });
    json!({
        "N": s.n,
        "F": f,
        "preset": s.preset,
        "generators": gens,
        "cutoffs": {"report": s.cutoffs.report, "work": s.cutoffs.work},
        "modulus": s.modulus,
    })
}

fn word(s: &str) -> Result<Word, Failure> {
    Ok(s.parse::<Word>()?)
}

fn modulus(explicit: Option<u32>, spec: &QGSpec, what: &str) -> Result<u32, Failure> {
    explicit
        .or(spec.modulus)
        .ok_or_else(|| Error::Parse(format!("{what} needs a modulus (flag or spec field)")).into())
}

fn not_less_than_one(l: u32) -> Result<(), Failure> {
    if l == 0 {
        return Err(Error::NotApplicable("the product needs a modulus of at least 1".into()).into());
    }
    Ok(())
}

/// Runs one command and writes its report. A failed verification still
/// writes the report before returning the failure.
pub fn run(cli: &Cli) -> Result<(), Failure> {
    let start = Instant::now();
    let spec = load(cli)?;
    let t = spec.table()?;
    let (command, payload, verified) = payload(cli, &spec, &t)?;
    let mut out = json!({
        "command": command,
        "cutoffs": {"report": t.report_cutoff(), "work": t.work_cutoff()},
        "engine": report::ENGINE,
        "input_digest": report::digest(&spec_value(&spec)),
        "payload": payload,
    });
    if cli.timing {
        out["timing_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    let text = report::render(&out);
    match &cli.json {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if verified {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn payload(cli: &Cli, spec: &QGSpec, t: &FixTable) -> Result<(&'static str, Value, bool), Failure> {
    let fr = t.frame();
    Ok(match &cli.cmd {
        Cmd::Dims => ("dims", report::table(t), true),
        Cmd::Mor { from, to } => {
            let (w1, w2) = (word(from)?, word(to)?);
            let s = mor_space(t, &w1, &w2)?;
            let basis: Vec<Value> = s.basis().iter().map(report::matrix).collect();
            let p = json!({"from": from, "to": to, "dim": s.dim(), "basis": basis});
            ("mor", p, true)
        }
        Cmd::Degree => {
            let d = degree_of_reflection(t);
            let witnesses: Vec<Value> = d
                .witnesses
                .iter()
                .map(|(a, b, c)| json!({"from": a.to_string(), "to": b.to_string(), "colour_difference": c}))
                .collect();
            let p = json!({"degree": d.value, "cutoff": d.cutoff, "witnesses": witnesses});
            ("degree", p, true)
        }
        Cmd::Check { predicate } => {
            let (name, c) = match predicate {
                Predicate::Global => {
                    let holds = is_globally_colourized(t)?;
                    let c = Check {
                        holds,
                        counterexample: (!holds).then(|| "wb -> bw".to_string()),
                    };
                    ("global", c)
                }
                Predicate::Inversion => ("inversion", colour_inversion_check(t)),
                Predicate::Alternating => ("alternating", alternating_check(t)?),
            };
            let mut p = report::check(&c);
            p["predicate"] = json!(name);
            ("check", p, true)
        }
        Cmd::Complexify {
            tensor,
            free,
            with_odd_witness,
        } => {
            let (mode, m, out) = match (tensor, free) {
                (Some(k), _) => ("tensor", *k, tensor_complexify(t, *k)),
                (None, Some(l)) => {
                    let opts = FreeOptions {
                        with_odd_witness: *with_odd_witness,
                    };
                    ("free", *l, free_complexify(t, *l, opts)?)
                }
                (None, None) => unreachable!("clap requires one mode"),
            };
            let mut p = report::table(&out);
            p["mode"] = json!(mode);
            p["modulus"] = json!(m);
            ("complexify", p, true)
        }
        Cmd::Glue { product, k } => {
            let k = modulus(*k, spec, "glue")?;
            not_less_than_one(k)?;
            let ext = match product {
                Product::Free => free_product_table(t, k, t.work_cutoff())?,
                Product::Times => {
                    times_product_table(t, k as usize, ExtCutoffs::squares(t.work_cutoff()))?
                }
            };
            let glued = glue_table(&ext, t.report_cutoff())?;
            let mut p = report::table(&glued);
            p["product"] = json!(match product {
                Product::Free => "free",
                Product::Times => "times",
            });
            p["modulus"] = json!(k);
            ("glue", p, true)
        }
        Cmd::Unglue {
            maximal,
            canonical,
            tensor,
        } => {
            let input = match tensor {
                Some(k) => tensor_complexify(t, *k),
                None => t.clone(),
            };
            let un = match (maximal, canonical) {
                (Some(k), _) => max_unglue(&input, *k)?,
                (None, true) => canonical_unglue_z2(&input)?,
                (None, false) => unreachable!("clap requires one mode"),
            };
            let back = glue_table(&un, input.report_cutoff())?;
            let mut p = report::ext_table(&un, input.report_cutoff());
            p["mode"] = json!(if *canonical { "canonical" } else { "maximal" });
            p["glue_round_trip"] = json!(back.first_difference(&input).is_none());
            ("unglue", p, true)
        }
        Cmd::Verify {
            theorem,
            k,
            l,
            modulus,
            tensor,
        } => {
            let v = match theorem {
                Theorem::A => verify_a(t, k)?,
                Theorem::B => verify_b(t, modulus.or(spec.modulus))?,
                Theorem::C => verify_c(t, l)?,
                Theorem::D => verify_d(t)?,
                Theorem::E => match tensor {
                    Some(m) => {
                        let g = tensor_complexify(t, *m);
                        let times = (*m > 0 && m % 2 == 0).then(|| (t, (*m / 2) as usize));
                        verify_e(&g, times)?
                    }
                    None => verify_e(t, None)?,
                },
            };
            let ok = v.holds();
            ("verify", report::verdict(&v), ok)
        }
        Cmd::Relations { from, to } => {
            let (w1, w2) = (word(from)?, word(to)?);
            let s = mor_space(t, &w1, &w2)?;
            let mut seen = BTreeSet::new();
            let mut rels = Vec::new();
            for b in s.basis() {
                for r in relations_from_intertwiner(&b, &w1, &w2, fr)? {
                    let text = r.to_string();
                    if !r.is_zero() && seen.insert(text.clone()) {
                        rels.push(text);
                    }
                }
            }
            let p = json!({"from": from, "to": to, "count": rels.len(), "relations": rels});
            ("relations", p, true)
        }
    })
}
