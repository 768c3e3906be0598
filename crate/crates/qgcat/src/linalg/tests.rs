use proptest::prelude::*;

use super::*;

fn s(x: i64) -> Scalar {
    Scalar::from_int(x)
}

/// Textbook Gauss-Jordan over Scalar; independent of the integer kernel.
fn naive_rref(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].inv().unwrap();
        a[rank] = a[rank].iter().map(|x| x * &inv).collect();
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &(y * &f);
                }
            }
        }
        rank += 1;
    }
    a.truncate(rank);
    a
}

fn cup(n: usize) -> LinMap {
    let mut v = LinMap::zero(n, 0, 2);
    for i in 0..n {
        v.set(i * n + i, 0, s(1));
    }
    v
}

#[test]
fn tensor_examples() {
    let id = LinMap::identity(2, 1);
    assert_eq!(tensor_product(&id, &id).unwrap(), LinMap::identity(2, 2));
    let six = tensor_product(&LinMap::scalar(2, s(2)), &LinMap::scalar(2, s(3))).unwrap();
    assert_eq!(six, LinMap::scalar(2, s(6)));
    let a = LinMap::zero(2, 1, 2);
    let b = LinMap::zero(2, 3, 0);
    let t = tensor_product(&a, &b).unwrap();
    assert_eq!((t.cod_len(), t.dom_len()), (2, 4));
    assert!(tensor_product(&a, &LinMap::zero(3, 0, 0)).is_err());
}

#[test]
fn compose_examples() {
    let t = LinMap::from_entries(2, 1, 1, vec![s(1), s(2), s(3), s(4)]).unwrap();
    let id = LinMap::identity(2, 1);
    assert_eq!(compose(&id, &t).unwrap(), t);
    assert_eq!(compose(&t, &id).unwrap(), t);
    let xi = cup(2);
    assert_eq!(
        compose(&adjoint(&xi), &xi).unwrap(),
        LinMap::scalar(2, s(2))
    );
    let err = compose(&t, &xi).unwrap_err();
    assert!(err.to_string().contains("dom 1 legs") && err.to_string().contains("cod 2 legs"));
}

#[test]
fn adjoint_examples() {
    let id = LinMap::identity(2, 1);
    assert_eq!(adjoint(&id), id);
    let t = LinMap::from_entries(
        2,
        1,
        1,
        vec![Scalar::gaussian(1, 2), s(2), s(3), Scalar::i()],
    )
    .unwrap();
    assert_eq!(adjoint(&adjoint(&t)), t);
    assert_eq!(adjoint(&id.scale(&Scalar::i())), id.scale(&-Scalar::i()));
}

#[test]
fn span_examples() {
    let z = Subspace::span_in(2, 0, 2, &[LinMap::zero(2, 0, 2)]).unwrap();
    assert_eq!(z.dim(), 0);
    let t = cup(2);
    assert_eq!(span(&[t.clone(), t.scale(&s(2))]).unwrap().dim(), 1);
    // The two noncrossing pairings on four legs.
    let p1 = cup(2).tensor(&cup(2)).unwrap();
    let mut p2 = LinMap::zero(2, 0, 4);
    for i in 0..2 {
        for j in 0..2 {
            p2.set(i * 8 + j * 4 + j * 2 + i, 0, s(1));
        }
    }
    let sp = span(&[p1.clone(), p2.clone()]).unwrap();
    let oracle = naive_rref(&[p1.entries().to_vec(), p2.entries().to_vec()]);
    assert_eq!(sp.dim(), oracle.len());
    assert_eq!(sp.dim(), 2);
    let basis: Vec<Vec<Scalar>> = sp.basis().iter().map(|m| m.entries().to_vec()).collect();
    assert_eq!(basis, oracle);
}

#[test]
fn member_examples() {
    let z = Subspace::zero(2, 1, 1);
    assert!(member(&z, &LinMap::zero(2, 1, 1)).unwrap());
    let id = LinMap::identity(2, 1);
    assert!(member(&span(&[id.clone()]).unwrap(), &id).unwrap());
    let proj = cup(2).compose(&adjoint(&cup(2))).unwrap();
    let sp = span(&[proj]).unwrap();
    assert!(!member(&sp, &LinMap::identity(2, 2)).unwrap());
    assert!(member(&sp, &LinMap::identity(2, 1)).is_err());
}

#[test]
fn intersect_examples() {
    let e = |i: usize| LinMap::basis_vector(3, &[i]);
    let v = span(&[e(0), e(1)]).unwrap();
    let w = span(&[e(1), e(2)]).unwrap();
    assert_eq!(intersect(&v, &v).unwrap(), v);
    assert_eq!(intersect(&v, &Subspace::zero(3, 0, 1)).unwrap().dim(), 0);
    assert_eq!(intersect(&v, &w).unwrap(), span(&[e(1)]).unwrap());
}

#[test]
fn inverse_of_small_matrices() {
    let f = LinMap::matrix(vec![vec![s(0), s(1)], vec![s(-1), s(0)]]).unwrap();
    let g = f.inverse().unwrap();
    assert_eq!(f.compose(&g).unwrap(), LinMap::identity(2, 1));
    let sing = LinMap::matrix(vec![vec![s(1), s(2)], vec![s(2), s(4)]]).unwrap();
    assert!(sing.inverse().is_none());
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3, -3i64..=3, 1i64..=2)
        .prop_map(|(a, b, c, d)| Scalar::from_parts(a, b, c, d))
}

fn map_strategy(n: usize, dom: usize, cod: usize) -> impl Strategy<Value = LinMap> {
    let len = n.pow((dom + cod) as u32);
    prop::collection::vec(scalar_strategy(), len)
        .prop_map(move |e| LinMap::from_entries(n, dom, cod, e).unwrap())
}

/// Vectors drawn from a small pool of directions so that dependencies occur.
fn low_rank_vectors(count: usize) -> impl Strategy<Value = Vec<LinMap>> {
    (
        prop::collection::vec(map_strategy(2, 0, 3), 3),
        prop::collection::vec((0usize..3, 0usize..3, scalar_strategy()), count),
    )
        .prop_map(|(pool, picks)| {
            picks
                .into_iter()
                .map(|(a, b, c)| pool[a].add(&pool[b].scale(&c)).unwrap())
                .collect()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjoint_reverses_products(a in map_strategy(2, 1, 2), b in map_strategy(2, 2, 1)) {
        let lhs = adjoint(&a.compose(&b).unwrap());
        let rhs = adjoint(&b).compose(&adjoint(&a)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn interchange_law(a in map_strategy(2, 1, 1), b in map_strategy(2, 1, 2), c in map_strategy(2, 1, 1), d in map_strategy(2, 2, 1)) {
        let lhs = a.tensor(&b).unwrap().compose(&c.tensor(&d).unwrap()).unwrap();
        let rhs = a.compose(&c).unwrap().tensor(&b.compose(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn span_idempotent_and_order_free(vs in low_rank_vectors(5)) {
        let sp = span(&vs).unwrap();
        let mut rev = vs.clone();
        rev.reverse();
        prop_assert_eq!(&span(&rev).unwrap(), &sp);
        prop_assert_eq!(&span(&sp.basis()).unwrap(), &sp);
        let oracle = naive_rref(&vs.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
        let basis: Vec<Vec<Scalar>> = sp.basis().iter().map(|m| m.entries().to_vec()).collect();
        prop_assert_eq!(basis, oracle);
    }

    #[test]
    fn member_iff_span_unchanged(vs in low_rank_vectors(3), t in low_rank_vectors(1)) {
        let sp = span(&vs).unwrap();
        let mut more = vs.clone();
        more.push(t[0].clone());
        prop_assert_eq!(sp.member(&t[0]).unwrap(), span(&more).unwrap() == sp);
    }

    #[test]
    fn dimension_formula(vs in low_rank_vectors(3), ws in low_rank_vectors(3)) {
        let v = span(&vs).unwrap();
        let w = span(&ws).unwrap();
        let both = v.intersect(&w).unwrap();
        prop_assert_eq!(v.dim() + w.dim(), v.sum(&w).unwrap().dim() + both.dim());
        prop_assert!(v.contains(&both).unwrap() && w.contains(&both).unwrap());
    }
}
