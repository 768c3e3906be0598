//! Acceptance run: one line per criterion. Everything is exact arithmetic,
//! so every comparison is equality with zero tolerance; the only pinned
//! numbers are the cutoffs, sample sizes and seeds below.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qgcat::category::{
    free_product_table, full_table_with_work, glue_table, table_intersect, ExtCutoffs, FixTable,
};
use qgcat::frame::{make_frame, word_duality, Frame};
use qgcat::linalg::{LinMap, Scalar};
use qgcat::presentation::{
    glue_with_reflection, homogeneous_components, relations_from_intertwiner, unglue_parse,
    Alphabet, Letter, Monomial, NCPoly,
};
use qgcat::transforms::*;
use qgcat::words::{Colour, Word};

use common::{first_mismatch, pairing_span, partition_closure_spans, preset_table, whites};

/// Zero: all checks are exact subspace or polynomial equalities.
const TOLERANCE: u32 = 0;
const REPORT: usize = 6;
const WORK: usize = 8;
/// S4+ lives on 4^8-dimensional spaces at the full work cutoff, so it runs
/// with the work cutoff equal to the report cutoff.
const S4_WORK: usize = 6;
const RANDOM_FRAMES: usize = 20;
const RANDOM_MONOMIALS: usize = 1000;
const RANDOM_POLYS: usize = 200;
const SEED: u64 = 2024;
/// Expected per-criterion wall time on a laptop; reported, not enforced.
const BUDGET: Duration = Duration::from_secs(60);

struct Tables {
    o2: FixTable,
    u2: FixTable,
    b2: FixTable,
    s4: FixTable,
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(what: &str, a: &FixTable, b: &FixTable) -> Outcome {
    match a.first_difference(b) {
        None => Ok(()),
        Some(w) => Err(format!("{what}: first difference at '{w}'")),
    }
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_parts(
        rng.gen_range(-4..=4),
        rng.gen_range(1..=3),
        rng.gen_range(-4..=4),
        rng.gen_range(1..=3),
    )
}

fn rand_frame(rng: &mut ChaCha8Rng, n: usize) -> Frame {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| rand_scalar(rng)).collect()).collect();
        if let Ok(f) = make_frame(&LinMap::matrix(rows).unwrap()) {
            return f;
        }
    }
}

fn rand_word(rng: &mut ChaCha8Rng, len: usize) -> Word {
    Word::new(
        (0..len)
            .map(|_| if rng.gen() { Colour::White } else { Colour::Black })
            .collect(),
    )
}

/// `(ξ_v* ⊗ 1)(1 ⊗ ξ_{v*}) = 1` on the word `v`.
fn snake(fr: &Frame, v: &Word) -> bool {
    let id = LinMap::identity(fr.n(), v.len());
    let lhs = word_duality(fr, v)
        .adjoint()
        .tensor(&id)
        .and_then(|a| a.compose(&id.tensor(&word_duality(fr, &v.star()))?))
        .unwrap();
    lhs == id
}

fn snakes(_: &Tables) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..RANDOM_FRAMES {
        let n = 2 + i % 2;
        let fr = rand_frame(&mut rng, n);
        for v in [w("w"), w("b"), rand_word(&mut rng, 2)] {
            ensure(snake(&fr, &v), || format!("frame {i} (N={n}) fails on '{v}'"))?;
        }
    }
    Ok(())
}

fn oracle_equivalence(t: &Tables) -> Outcome {
    for (name, n, table) in [("O+", 2, &t.o2), ("S+", 4, &t.s4), ("B+", 2, &t.b2)] {
        let spans = partition_closure_spans(name, n, REPORT);
        if let Some(v) = first_mismatch(table, REPORT, |x| spans[x].clone()) {
            return Err(format!("{name} N={n} differs from the partition span at '{v}'"));
        }
    }
    let dims: Vec<usize> = [0, 2, 4, 6]
        .iter()
        .map(|&l| pairing_span(2, &whites(l), false).dim())
        .collect();
    ensure(dims == [1, 1, 2, 5], || format!("pairing oracle dims {dims:?}"))?;
    for l in [0, 2, 4, 6] {
        let got = t.o2.space(&whites(l)).unwrap();
        ensure(got == &pairing_span(2, &whites(l), false), || {
            format!("O+ at length {l} differs from the pairing span")
        })?;
    }
    Ok(())
}

fn degrees(t: &Tables) -> Outcome {
    for (name, table, want) in [("O+", &t.o2, 2), ("S+", &t.s4, 1), ("U+", &t.u2, 0)] {
        let at6 = degree_at_cutoff(table, REPORT).value;
        ensure(at6 == want, || format!("{name}: degree {at6}, expected {want}"))?;
        let at4 = degree_at_cutoff(table, 4).value;
        let refines = if at6 == 0 { at4 == 0 } else { at4 % at6 == 0 };
        ensure(refines, || format!("{name}: cutoff 4 gives {at4}, cutoff 6 gives {at6}"))?;
    }
    Ok(())
}

fn tensor_is_intersection(t: &Tables) -> Outcome {
    for (name, h) in [("O+", &t.o2), ("S+", &t.s4)] {
        for k in [0, 2, 3] {
            let full = full_table_with_work(h.frame(), k, h.report_cutoff(), h.work_cutoff());
            let meet = table_intersect(h, &full).map_err(|e| e.to_string())?;
            same(&format!("{name} k={k}"), &tensor_complexify(h, k), &meet)?;
        }
    }
    Ok(())
}

fn free_is_glued_product(t: &Tables) -> Outcome {
    let u = t.o2.frame();
    for x in qgcat::words::enumerate_words(REPORT) {
        ensure(t.u2.space(&x) == Some(&pairing_span(u.n(), &x, true)), || {
            format!("U+ closure differs from coloured pairings at '{x}'")
        })?;
    }
    for l in [2, 3] {
        let fp = free_product_table(&t.o2, l, WORK).map_err(|e| e.to_string())?;
        let glued = glue_table(&fp, REPORT).map_err(|e| e.to_string())?;
        let fc = free_complexify(&t.o2, l, FreeOptions::default()).map_err(|e| e.to_string())?;
        same(&format!("l={l} glued vs free"), &glued, &fc)?;
        same(&format!("l={l} free vs U+"), &fc, &t.u2)?;
    }
    Ok(())
}

fn ungluing(t: &Tables) -> Outcome {
    let g = tensor_complexify(&t.o2, 4);
    let un = canonical_unglue_z2(&g).map_err(|e| e.to_string())?;
    same("glue(unglue(T))", &glue_table(&un, REPORT).map_err(|e| e.to_string())?, &g)?;
    let prod = times_product_table(&t.o2, 2, ExtCutoffs::squares(WORK)).map_err(|e| e.to_string())?;
    match un.first_difference_within(&prod, REPORT) {
        None => Ok(()),
        Some(x) => Err(format!("unglued vs product relations differ at '{x}'")),
    }
}

fn iteration_laws(t: &Tables) -> Outcome {
    let h = &t.o2;
    for (k, l) in [(2, 3), (2, 4), (0, 2)] {
        let twice = tensor_complexify(&tensor_complexify(h, k), l);
        let once = tensor_complexify(h, lcm0(k as u64, l as u64) as u32);
        same(&format!("tensor {k} then {l}"), &twice, &once)?;
    }
    let free0 = free_complexify(h, 0, FreeOptions::default()).map_err(|e| e.to_string())?;
    for k in [0, 2, 3] {
        for l in [0, 2, 3] {
            let tf = free_complexify(&tensor_complexify(h, k), l, FreeOptions::default())
                .map_err(|e| e.to_string())?;
            same(&format!("tensor {k} then free {l}"), &tf, &free0)?;
        }
    }
    Ok(())
}

fn rand_entry(rng: &mut ChaCha8Rng, n: u16) -> Letter {
    let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
    if rng.gen() {
        Letter::X(i, j)
    } else {
        Letter::XStar(i, j)
    }
}

fn presentation_layer(_: &Tables) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let e = Alphabet::Entries;
    for _ in 0..RANDOM_MONOMIALS {
        let len = rng.gen_range(0..=8);
        let m = Monomial::new((0..len).map(|_| rand_entry(&mut rng, 3)));
        let f = NCPoly::term(3, e, m, Scalar::one()).unwrap();
        let glued = glue_with_reflection(&f).map_err(|e| e.to_string())?;
        // gluing lands on even monomials; parsing them back is the inverse
        ensure(glued.terms().all(|(m, _)| m.len() % 2 == 0), || format!("odd glue of {f}"))?;
        let back = unglue_parse(&glued).map_err(|e| e.to_string())?;
        ensure(back == f, || format!("round trip of {f} gave {back}"))?;
    }
    for _ in 0..RANDOM_POLYS {
        let mut f = NCPoly::zero(3, e);
        for _ in 0..rng.gen_range(0..6) {
            let len = rng.gen_range(0..5);
            let m = Monomial::new((0..len).map(|_| rand_entry(&mut rng, 3)));
            let c = rand_scalar(&mut rng);
            f = f.add(&NCPoly::term(3, e, m, c).unwrap()).unwrap();
        }
        let k = rng.gen_range(0..5);
        let parts: BTreeMap<i64, NCPoly> = homogeneous_components(&f, k);
        let sum = parts.values().fold(NCPoly::zero(3, e), |acc, p| acc.add(p).unwrap());
        ensure(sum == f, || format!("components of {f} (k={k}) sum to {sum}"))?;
    }
    let fr = Frame::identity(2);
    let rels = relations_from_intertwiner(&LinMap::identity(2, 2), &w("wb"), &w("bw"), &fr)
        .map_err(|e| e.to_string())?;
    ensure(rels.len() == 16, || format!("{} relations", rels.len()))?;
    for (r, p) in rels.iter().enumerate() {
        let (row, col) = (r / 4, r % 4);
        let (i1, i2) = (row as u16 / 2 + 1, row as u16 % 2 + 1);
        let (j1, j2) = (col as u16 / 2 + 1, col as u16 % 2 + 1);
        let term = |l: Vec<Letter>| NCPoly::term(2, e, Monomial::new(l), Scalar::one()).unwrap();
        let want = term(vec![Letter::X(i1, j1), Letter::XStar(i2, j2)])
            .sub(&term(vec![Letter::XStar(i1, j1), Letter::X(i2, j2)]))
            .unwrap();
        ensure(p == &want, || format!("relation {r}: {p}, expected {want}"))?;
    }
    Ok(())
}

fn predicates(t: &Tables) -> Outcome {
    for (name, h) in [("O+", &t.o2), ("B+", &t.b2)] {
        let g = tensor_complexify(h, 0);
        let col = is_globally_colourized(&g).map_err(|e| e.to_string())?;
        ensure(col, || format!("{name}: tensor complexification not globally colourized"))?;
        let d = degree_of_reflection(&g).value;
        ensure(d == 0, || format!("{name}: degree {d}"))?;
    }
    let g = tensor_complexify(&t.o2, 0);
    let back = tensor_complexify(&orthogonal_part(&g).map_err(|e| e.to_string())?, 0);
    same("reconstruction", &back, &g)?;
    let v = verify_b(&t.o2, None).map_err(|e| e.to_string())?;
    ensure(v.holds() && !v.evidence_only, || format!("{v:?}"))
}

#[test]
fn acceptance() {
    assert_eq!(TOLERANCE, 0);
    let start = Instant::now();
    let tables = Tables {
        o2: preset_table("O+", 2, REPORT, WORK),
        u2: preset_table("U+", 2, REPORT, WORK),
        b2: preset_table("B+", 2, REPORT, WORK),
        s4: preset_table("S+", 4, REPORT, S4_WORK),
    };
    println!("tables built in {:.1?}", start.elapsed());
    let criteria: [(&str, fn(&Tables) -> Outcome); 9] = [
        ("snake equations for random frames", snakes),
        ("closure equals partition span", oracle_equivalence),
        ("degree of reflection certificates", degrees),
        ("tensor complexification is an intersection", tensor_is_intersection),
        ("free complexification is the glued free product", free_is_glued_product),
        ("canonical ungluing", ungluing),
        ("iteration laws", iteration_laws),
        ("presentation layer", presentation_layer),
        ("predicate coherence", predicates),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run(&tables);
        let took = t0.elapsed();
        let over = if took > BUDGET { " over budget" } else { "" };
        match &outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({took:.1?}{over})", i + 1),
            Err(e) => {
                println!("criterion {}: FAIL  {name} ({took:.1?}{over}): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
