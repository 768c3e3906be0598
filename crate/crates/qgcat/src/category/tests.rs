use super::freeprod::free_product_fixpoint;
use super::*;
use crate::frame::word_duality;
use crate::linalg::LinMap;
use crate::partitions::{noncrossing_fix_partitions, partition_map, Partition};
use crate::words::words_of_length;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn pair_space(n: usize, a: Colour, b: Colour) -> Subspace {
    Subspace::span_in(n, 0, 2, &[partition_map(&Partition::pair(a, b), n)]).unwrap()
}

fn orthogonal(n: usize, report: usize, work: usize) -> FixTable {
    let fr = Frame::identity(n);
    closure(
        &fr,
        &[(w("ww"), pair_space(n, Colour::White, Colour::White))],
        report,
        work,
    )
    .unwrap()
}

fn unitary(n: usize, report: usize, work: usize) -> FixTable {
    closure(&Frame::identity(n), &[], report, work).unwrap()
}

/// Rank of the noncrossing pairings on `w` whose blocks join opposite
/// colours (or any colours when `coloured` is false).
fn pairing_rank(n: usize, word: &Word, coloured: bool) -> usize {
    let maps: Vec<LinMap> = noncrossing_fix_partitions(word)
        .into_iter()
        .filter(|p| {
            p.blocks().iter().all(|b| {
                b.len() == 2 && (!coloured || word.letters()[b[0]] != word.letters()[b[1]])
            })
        })
        .map(|p| partition_map(&p, n))
        .collect();
    Subspace::span_in(n, 0, word.len(), &maps).unwrap().dim()
}

#[test]
fn orthogonal_dims_match_pairing_oracle() {
    let t = orthogonal(2, 6, 8);
    for (word, d) in t.dims() {
        assert_eq!(d, pairing_rank(2, &word, false), "at {word}");
    }
    let by_len: Vec<usize> = [0, 2, 4, 6]
        .iter()
        .map(|&l| t.space(&Word::repeat(Colour::White, l)).unwrap().dim())
        .collect();
    assert_eq!(by_len, vec![1, 1, 2, 5]);
}

#[test]
fn unitary_dims_match_coloured_pairings() {
    let t = unitary(2, 6, 8);
    assert_eq!(t.space(&w("wbwb")).unwrap().dim(), 2);
    assert_eq!(t.space(&w("wwbb")).unwrap().dim(), 1);
    for (word, d) in t.dims() {
        assert_eq!(d, pairing_rank(2, &word, true), "at {word}");
    }
}

#[test]
fn full_generator_is_absorbing() {
    let fr = Frame::identity(2);
    let t = closure(&fr, &[(w("w"), Subspace::full(2, 0, 1))], 4, 4).unwrap();
    assert!(t.spaces().iter().all(|s| s.is_full()));
}

#[test]
fn duality_vectors_are_in_every_table() {
    let fr = make_frame(
        &LinMap::matrix(vec![vec![1.into(), 2.into()], vec![0.into(), Scalar::i()]]).unwrap(),
    )
    .unwrap();
    let t = closure(&fr, &[], 6, 6).unwrap();
    for word in crate::words::enumerate_words(3) {
        let xi = word_duality(&fr, &word);
        let target = word.concat(&word.star());
        assert!(t.space(&target).unwrap().member(&xi).unwrap(), "{word}");
    }
    // dimensions are rotation invariant
    for word in crate::words::enumerate_words(6)
        .into_iter()
        .filter(|x| !x.is_empty())
    {
        assert_eq!(
            t.space(&word).unwrap().dim(),
            t.space(&word.rotated()).unwrap().dim()
        );
    }
}

use crate::frame::make_frame;
use crate::linalg::Scalar;

#[test]
fn closure_is_idempotent_and_monotone() {
    let t = orthogonal(2, 4, 6);
    let gens: Vec<(Word, Subspace)> = crate::words::enumerate_words(6)
        .into_iter()
        .map(|x| (x.clone(), t.space(&x).unwrap().clone()))
        .collect();
    let again = closure(t.frame(), &gens, 4, 6).unwrap();
    assert_eq!(again, t);
    let u = unitary(2, 4, 6);
    assert!(table_leq(&u, &t).unwrap());
    assert!(!table_leq(&t, &u).unwrap());
    assert_eq!(table_join(&u, &t).unwrap(), t);
    assert_eq!(table_intersect(&u, &t).unwrap(), u);
    let wider = orthogonal(2, 4, 4);
    for x in crate::words::enumerate_words(4) {
        assert!(t
            .space(&x)
            .unwrap()
            .contains(wider.space(&x).unwrap())
            .unwrap());
    }
}

#[test]
fn mor_spaces_of_orthogonal_table() {
    let t = orthogonal(2, 4, 6);
    assert_eq!(mor_space(&t, &w("w"), &w("w")).unwrap().dim(), 1);
    assert_eq!(mor_space(&t, &w("ww"), &w("ww")).unwrap().dim(), 2);
    assert_eq!(
        &mor_space(&t, &Word::empty(), &w("wbwb")).unwrap(),
        t.space(&w("wbwb")).unwrap()
    );
    assert!(matches!(
        mor_space(&t, &w("www"), &w("ww")),
        Err(Error::Cutoff(_))
    ));
}

#[test]
fn full_tables() {
    let fr = Frame::identity(2);
    assert!(full_table(&fr, 1, 3).spaces().iter().all(|s| s.is_full()));
    let t2 = full_table(&fr, 2, 3);
    assert!(t2.space(&w("w")).unwrap().is_zero());
    assert!(t2.space(&w("wb")).unwrap().is_full());
    let t0 = full_table(&fr, 0, 4);
    assert!(t0.space(&w("wwbb")).unwrap().is_full());
    assert!(t0.space(&w("wwb")).unwrap().is_zero());
}

#[test]
fn ext_closure_restricts_to_plain_closure() {
    let fr = Frame::identity(2);
    let ww = pair_space(2, Colour::White, Colour::White);
    let plain = closure(&fr, &[(w("ww"), ww.clone())], 4, 4).unwrap();
    let ext = ext_closure(
        &fr,
        3,
        &[(ExtWord::parse("ss", 3).unwrap(), ww)],
        ExtCutoffs::squares(4),
    )
    .unwrap();
    for x in crate::words::enumerate_words(4) {
        assert_eq!(
            ext.space(&ExtWord::from_circles(3, &x)).unwrap(),
            plain.space(&x).unwrap(),
            "{x}"
        );
    }
    let a = ExtWord::parse("sStTsS", 3).unwrap();
    let b = ExtWord::parse("sSsS", 3).unwrap();
    assert_eq!(ext.space(&a), ext.space(&b));
}

#[test]
fn ext_unit_seed_z2() {
    let fr = Frame::identity(2);
    let ext = ext_closure(&fr, 2, &[], ExtCutoffs::squares(4)).unwrap();
    for (word, s) in ext.entries() {
        if !s.is_zero() {
            // a nonzero space needs a coloured pairing of the squares and
            // the triangles inside every pair to cancel
            assert!(pairing_rank(2, &word.square_word(), true) > 0, "{word}");
            assert_eq!(word.exponent_sum(), 0, "{word}");
        }
    }
    assert_eq!(
        ext.space(&ExtWord::parse("sS", 2).unwrap()).unwrap().dim(),
        1
    );
    assert!(ext
        .space(&ExtWord::parse("stS", 2).unwrap())
        .unwrap()
        .is_zero());
    assert!(ext
        .space(&ExtWord::parse("t", 2).unwrap())
        .unwrap()
        .is_zero());
}

#[test]
fn free_product_examples() {
    let h = orthogonal(2, 6, 6);
    let g = free_product_table(&h, 2, 4).unwrap();
    assert_eq!(g.space(&ExtWord::parse("sS", 2).unwrap()).unwrap().dim(), 1);
    assert!(g
        .space(&ExtWord::parse("stst", 2).unwrap())
        .unwrap()
        .is_zero());
    assert_eq!(g.space(&glue_word(&w("wwbb"), 2)).unwrap().dim(), 1);
}

#[test]
fn free_product_matches_generated_extended_category() {
    // C_{H * Ẑ_l} is generated by H placed on triangle-free words
    for l in [2, 3] {
        let h = orthogonal(2, 4, 4);
        let fp = free_product_table(&h, l, 4).unwrap();
        let gens: Vec<(ExtWord, Subspace)> = crate::words::enumerate_words(4)
            .into_iter()
            .map(|x| (ExtWord::from_circles(l, &x), h.space(&x).unwrap().clone()))
            .collect();
        let ext = ext_closure(h.frame(), l, &gens, ExtCutoffs::squares(4)).unwrap();
        assert_eq!(fp.first_difference(&ext), None, "l = {l}");
    }
}

#[test]
fn free_product_fixpoint_is_order_independent() {
    let h = orthogonal(2, 4, 4);
    let reference = free_product_table(&h, 3, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut order: Vec<usize> = (0..reference.coder().len()).collect();
    for _ in 0..3 {
        order.shuffle(&mut rng);
        let t = free_product_fixpoint(&h, 3, 4, &order).unwrap();
        assert_eq!(t, reference);
    }
}

#[test]
fn glue_of_free_product_is_unitary() {
    let h = orthogonal(2, 4, 4);
    let g = glue_table(&free_product_table(&h, 2, 4).unwrap(), 4).unwrap();
    let u = unitary(2, 4, 4);
    assert_eq!(g.first_difference(&u), None);
    assert_eq!(g.space(&w("wb")).unwrap().dim(), 1);
}

#[test]
fn odd_words_are_zero_without_generators() {
    let t = unitary(2, 5, 5);
    for l in [1, 3, 5] {
        for x in words_of_length(l) {
            assert!(t.space(&x).unwrap().is_zero());
        }
    }
}
