use proptest::prelude::*;

use super::*;

fn x(i: u16, j: u16) -> Letter {
    Letter::X(i, j)
}

fn xs(i: u16, j: u16) -> Letter {
    Letter::XStar(i, j)
}

fn mono(n: usize, a: Alphabet, l: Vec<Letter>) -> NCPoly {
    NCPoly::term(n, a, Monomial::new(l), Scalar::one()).unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

#[test]
fn identity_gives_zero_relations() {
    let fr = Frame::identity(2);
    let rels = relations_from_intertwiner(&LinMap::identity(2, 1), &w("w"), &w("w"), &fr).unwrap();
    assert_eq!(rels.len(), 4);
    assert!(rels.iter().all(|p| p.is_zero()));
}

#[test]
fn swap_identity_gives_commutation_family() {
    let fr = Frame::identity(2);
    let rels = relations_from_intertwiner(&LinMap::identity(2, 2), &w("wb"), &w("bw"), &fr).unwrap();
    assert_eq!(rels.len(), 16);
    // entry ((i1 i2), (j1 j2)) is x[i1,j1] x*[i2,j2] - x*[i1,j1] x[i2,j2]
    for (r, p) in rels.iter().enumerate() {
        let (row, col) = (r / 4, r % 4);
        let (i1, i2) = (row as u16 / 2 + 1, row as u16 % 2 + 1);
        let (j1, j2) = (col as u16 / 2 + 1, col as u16 % 2 + 1);
        let expect = mono(2, Alphabet::Entries, vec![x(i1, j1), xs(i2, j2)])
            .sub(&mono(2, Alphabet::Entries, vec![xs(i1, j1), x(i2, j2)]))
            .unwrap();
        assert_eq!(p, &expect);
        assert_eq!(homogeneous_components(p, 0).keys().copied().collect::<Vec<_>>(), vec![0]);
    }
    assert_eq!(rels[1].to_string(), "x[1,1] x*[1,2] - x*[1,1] x[1,2]");
}

#[test]
fn duality_vector_gives_unitarity() {
    let fr = Frame::identity(2);
    let rels = relations_from_intertwiner(fr.xi_wb(), &Word::empty(), &w("wb"), &fr).unwrap();
    assert_eq!(rels.len(), 4);
    for (r, p) in rels.iter().enumerate() {
        let (i, j) = (r as u16 / 2 + 1, r as u16 % 2 + 1);
        let mut expect = NCPoly::zero(2, Alphabet::Entries);
        if i == j {
            expect = mono(2, Alphabet::Entries, vec![]);
        }
        for k in 1..=2 {
            expect = expect.sub(&mono(2, Alphabet::Entries, vec![x(i, k), xs(j, k)])).unwrap();
        }
        assert_eq!(p, &expect);
    }
    assert_eq!(rels[0].to_string(), "1 - x[1,1] x*[1,1] - x[1,2] x*[1,2]");
}

#[test]
fn relations_of_fixed_vectors_with_zero_colour_sum_are_homogeneous() {
    let fr = crate::frame::make_frame(
        &LinMap::matrix(vec![vec![1.into(), 2.into()], vec![0.into(), Scalar::i()]]).unwrap(),
    )
    .unwrap();
    let t = crate::category::closure(&fr, &[], 4, 4).unwrap();
    for word in crate::words::enumerate_words(4).into_iter().filter(|v| v.colour_sum() == 0) {
        for v in t.space(&word).unwrap().basis() {
            for p in relations_from_intertwiner(&v, &Word::empty(), &word, &fr).unwrap() {
                assert!(homogeneous_components(&p, 0).keys().all(|&d| d == 0), "{word}: {p}");
            }
        }
    }
}

#[test]
fn shape_errors() {
    let fr = Frame::identity(2);
    assert!(matches!(
        relations_from_intertwiner(&LinMap::identity(2, 1), &w("ww"), &w("w"), &fr),
        Err(Error::Shape(_))
    ));
}

#[test]
fn homogeneous_component_examples() {
    let a = mono(2, Alphabet::Entries, vec![x(1, 1)]);
    let b = mono(2, Alphabet::Entries, vec![x(1, 1), x(1, 2)]);
    let f = a.add(&b).unwrap();
    let comps = homogeneous_components(&f, 2);
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[&1], a);
    assert_eq!(comps[&0], b);
    let g = mono(2, Alphabet::Entries, vec![x(1, 1), xs(1, 2)]);
    for k in [0, 2, 3] {
        assert_eq!(homogeneous_components(&g, k).into_iter().collect::<Vec<_>>(), vec![(0, g.clone())]);
    }
}

#[test]
fn alternating_examples() {
    let e = Alphabet::Entries;
    assert!(is_alternating_poly(&mono(4, e, vec![x(1, 1), xs(2, 2), x(1, 3), xs(2, 4)])));
    assert!(!is_alternating_poly(&mono(2, e, vec![x(1, 1), x(1, 2)])));
    let f = mono(2, e, vec![xs(1, 1), x(1, 2)]).sub(&mono(2, e, vec![xs(2, 1), x(2, 2)])).unwrap();
    assert!(is_alternating_poly(&f));
    let mixed = mono(2, e, vec![xs(1, 1), x(1, 2)]).add(&mono(2, e, vec![x(2, 1), xs(2, 2)])).unwrap();
    assert!(!is_alternating_poly(&mixed));
    assert!(!is_alternating_poly(&mono(2, e, vec![x(1, 1)])));
}

#[test]
fn glue_examples() {
    let e = Alphabet::Entries;
    let u = Alphabet::Unitary;
    assert_eq!(glue_substitute(&mono(2, e, vec![x(1, 1)])).unwrap(), mono(2, u, vec![x(1, 1), Letter::Z(1)]));
    let g = glue_substitute(&mono(2, e, vec![x(1, 1), xs(1, 2)])).unwrap();
    assert_eq!(g, mono(2, u, vec![x(1, 1), xs(1, 2)]));
    let h = glue_substitute(&mono(2, e, vec![x(1, 1), x(1, 2)])).unwrap();
    assert_eq!(h.to_string(), "x[1,1] z x[1,2] z");
    let k = glue_substitute(&mono(2, e, vec![xs(1, 1), xs(1, 2)])).unwrap();
    assert_eq!(k.to_string(), "z* x*[1,1] z* x*[1,2]");
}

#[test]
fn unglue_examples() {
    let r = Alphabet::Reflection;
    let e = Alphabet::Entries;
    let p = unglue_parse(&mono(2, r, vec![x(1, 1), Letter::R, x(1, 2), Letter::R])).unwrap();
    assert_eq!(p, mono(2, e, vec![x(1, 1), x(1, 2)]));
    let q = unglue_parse(&mono(2, r, vec![Letter::R, x(1, 1), Letter::R, x(1, 2)])).unwrap();
    assert_eq!(q, mono(2, e, vec![xs(1, 1), xs(1, 2)]));
    let s = unglue_parse(&mono(2, r, vec![x(1, 1), x(1, 2)])).unwrap();
    assert_eq!(s, mono(2, e, vec![x(1, 1), xs(1, 2)]));
    for odd in [vec![x(1, 1)], vec![Letter::R], vec![x(1, 1), Letter::R, x(2, 2)]] {
        assert!(matches!(unglue_parse(&mono(2, r, odd)), Err(Error::NotApplicable(_))));
    }
}

#[test]
fn monomial_reduction_and_order() {
    let m = Monomial::new([Letter::Z(1), Letter::Z(-1), x(1, 1), Letter::Z(2), Letter::Z(1)]);
    assert_eq!(m.letters(), &[x(1, 1), Letter::Z(3)]);
    assert_eq!(m.len(), 4);
    assert!(Monomial::new([Letter::R, Letter::R]).is_empty());
    let f = mono(2, Alphabet::Entries, vec![x(2, 1), x(1, 1)])
        .add(&mono(2, Alphabet::Entries, vec![x(1, 2)]))
        .unwrap()
        .scale(&Scalar::from_parts(3, 2, 0, 1));
    assert_eq!(f.to_string(), "3/2 * x[1,2] + 3/2 * x[2,1] x[1,1]");
}

fn entry() -> impl Strategy<Value = Letter> {
    (1u16..=3, 1u16..=3, any::<bool>()).prop_map(|(i, j, s)| if s { xs(i, j) } else { x(i, j) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn unglue_inverts_glue(letters in prop::collection::vec(entry(), 0..8)) {
        let m = mono(3, Alphabet::Entries, letters);
        let glued = glue_with_reflection(&m).unwrap();
        prop_assert_eq!(unglue_parse(&glued).unwrap(), m);
    }

    #[test]
    fn gluing_doubles_degree(letters in prop::collection::vec(entry(), 0..8)) {
        let m = mono(3, Alphabet::Entries, letters.clone());
        let g = glue_substitute(&m).unwrap();
        let (mono_g, _) = g.terms().next().unwrap();
        let d = Monomial::new(letters).degree();
        prop_assert_eq!(mono_g.degree(), 2 * d);
    }

    #[test]
    fn components_sum_to_input(
        terms in prop::collection::vec((prop::collection::vec(entry(), 0..5), -3i64..4), 0..6),
        k in 0u32..5,
    ) {
        let mut f = NCPoly::zero(3, Alphabet::Entries);
        for (l, c) in terms {
            f = f.add(&NCPoly::term(3, Alphabet::Entries, Monomial::new(l), c.into()).unwrap()).unwrap();
        }
        let comps = homogeneous_components(&f, k);
        let mut sum = NCPoly::zero(3, Alphabet::Entries);
        for (d, c) in &comps {
            for (m, _) in c.terms() {
                let deg = m.degree();
                prop_assert_eq!(if k == 0 { deg } else { deg.rem_euclid(k as i64) }, *d);
            }
            sum = sum.add(c).unwrap();
        }
        prop_assert_eq!(sum, f);
    }
}
