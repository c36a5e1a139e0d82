//! Frozen values checked against independent routes: the defining product
//! for Gaussian coefficients, exhaustive tables for field arithmetic, and
//! direct enumeration for subspace counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use qkneser::field::{make_field, FieldCtx, FieldElem};
use qkneser::identities::IdentityChecker;
use qkneser::oracle::{enumerate_subspaces, intersection_dim, subspace_count};
use qkneser::spectrum::{evaluated_spectrum, multiplicity, simple_eigenvalue};
use qkneser::{gauss, gauss_eval_product, GaussTable, LaurentPoly};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn symbolic_gauss_matches_product_formula_on_grid() {
    let table = GaussTable::new();
    for n in -8..=12 {
        for i in 0..=8u32 {
            let sym = table.get(n, i);
            for q0 in [2, 3, 4, 5] {
                assert_eq!(
                    sym.eval(q0).unwrap(),
                    gauss_eval_product(n, i64::from(i), q0).unwrap(),
                    "[{n} choose {i}] at q={q0}"
                );
            }
        }
    }
}

#[test]
fn negative_top_values() {
    // (q^-1 - 1)/(q - 1) = -q^-1 at three points
    for q0 in [2, 3, 5] {
        assert_eq!(gauss_eval_product(-1, 1, q0).unwrap(), rat(-1, q0));
    }
    assert_eq!(gauss(-1, 1).unwrap(), "-q^-1".parse::<LaurentPoly>().unwrap());
    assert_eq!(
        gauss(-4, 2).unwrap(),
        "q^-3 + q^-4 + 2*q^-5 + 2*q^-6 + 2*q^-7 + q^-8 + q^-9"
            .parse::<LaurentPoly>()
            .unwrap()
    );
}

#[test]
fn lemma1_at_five_two_by_product() {
    // [5,2] = q^9 [-4,2]
    let lhs = gauss_eval_product(5, 2, 2).unwrap();
    let rhs = gauss_eval_product(-4, 2, 2).unwrap() * rat(512, 1);
    assert_eq!(lhs, rhs);
    assert_eq!(lhs, rat(155, 1));
}

#[test]
fn spot_identity_values() {
    let c = IdentityChecker::new();
    // theorem2(1,2,1) both sides q; corollary1(2,4) both sides q^4 = 16 at q=2
    let (l, _) = c.sides(qkneser::IdentityId::Theorem2, &[1, 2, 1]).unwrap();
    assert_eq!(l, LaurentPoly::q());
    let (l, r) = c.sides(qkneser::IdentityId::Corollary1, &[2, 4]).unwrap();
    assert_eq!(l.eval(2).unwrap(), rat(16, 1));
    assert_eq!(r.eval(2).unwrap(), rat(16, 1));
    // lemma3(3,2,1): evaluate both sides at q=2 through the product formula
    let mut lhs = rat(0, 1);
    for s in 0..=2i64 {
        let sign = if s % 2 == 0 { 1 } else { -1 };
        let pw = 2i64.pow((s * (s - 1) / 2) as u32);
        lhs += rat(sign * pw, 1)
            * gauss_eval_product(3, s, 2).unwrap()
            * gauss_eval_product(2 - s, 1, 2).unwrap();
    }
    let rhs = rat(2i64.pow(3), 1) * gauss_eval_product(-1, 1, 2).unwrap();
    assert_eq!(lhs, rhs);
    let (l, r) = c.sides(qkneser::IdentityId::Lemma3, &[3, 2, 1]).unwrap();
    assert_eq!(l.eval(2).unwrap(), lhs);
    assert_eq!(r.eval(2).unwrap(), rhs);
}

#[test]
fn spectrum_values_frozen_from_numeric_eigendecomposition() {
    // Independently obtained by floating-point eigendecomposition of the
    // brute-force adjacency matrices (35, 155 and 130 vertices).
    let cases: [(u32, u32, u64, [(i64, i64); 3]); 3] = [
        (4, 2, 2, [(16, 1), (-4, 14), (2, 20)]),
        (5, 2, 2, [(112, 1), (-12, 30), (2, 124)]),
        (4, 2, 3, [(81, 1), (-9, 39), (3, 90)]),
    ];
    for (v, k, q, expect) in cases {
        let got = evaluated_spectrum(v, k, q).unwrap().pairs();
        let expect: Vec<(BigInt, BigInt)> = expect
            .iter()
            .map(|(l, m)| (BigInt::from(*l), BigInt::from(*m)))
            .collect();
        assert_eq!(got, expect, "qK({v},{k}) over GF({q})");
    }
    assert_eq!(
        simple_eigenvalue(5, 2, 1).unwrap(),
        "-q^3 - q^2".parse::<LaurentPoly>().unwrap()
    );
    assert_eq!(
        multiplicity(4, 2, 1).unwrap().eval(2).unwrap(),
        rat(14, 1)
    );
}

#[test]
fn subspace_counts_match_formula() {
    let cases = [
        (3, 1, 2, 7),
        (4, 2, 2, 35),
        (5, 2, 3, 1210),
        (6, 3, 2, 1395),
        (4, 2, 4, 357),
        (4, 2, 9, 7462),
    ];
    for (v, k, q, count) in cases {
        assert_eq!(subspace_count(v, k, q), BigInt::from(count));
        let f = FieldCtx::for_order(q).unwrap();
        let listed = enumerate_subspaces(&f, v as usize, k as usize, 10_000).unwrap();
        assert_eq!(listed.len(), count as usize, "({v},{k},{q})");
    }
}

#[test]
fn brute_force_subspace_count_small() {
    // Distinct row spaces of all k-tuples of vectors, deduplicated by RREF.
    use std::collections::HashSet;
    let f = make_field(2, 2).unwrap();
    let v = 3;
    let vectors: Vec<Vec<FieldElem>> = (0..64u32)
        .map(|x| (0..v).map(|d| f.elem((x >> (2 * d)) & 3).unwrap()).collect())
        .collect();
    let mut lines = HashSet::new();
    let mut planes = HashSet::new();
    for a in &vectors {
        let s = qkneser::oracle::Subspace::from_rows(&f, v, std::slice::from_ref(a)).unwrap();
        if s.dim() == 1 {
            lines.insert(s);
        }
        for b in &vectors {
            let s = qkneser::oracle::Subspace::from_rows(&f, v, &[a.clone(), b.clone()]).unwrap();
            if s.dim() == 2 {
                planes.insert(s);
            }
        }
    }
    assert_eq!(lines.len(), 21);
    assert_eq!(planes.len(), 21);
    let enumerated: HashSet<_> = enumerate_subspaces(&f, 3, 2, 2000).unwrap().into_iter().collect();
    assert_eq!(enumerated, planes);
}

fn field_axioms(f: &FieldCtx) {
    let elems: Vec<FieldElem> = f.elements().collect();
    assert_eq!(elems.len() as u64, f.order());
    for &a in &elems {
        assert_eq!(f.add(a, FieldElem::ZERO), a);
        assert_eq!(f.mul(a, FieldElem::ONE), a);
        assert_eq!(f.add(a, f.neg(a)), FieldElem::ZERO);
        if !a.is_zero() {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
            assert_eq!(f.pow(a, f.order() - 1), FieldElem::ONE);
        }
        for &b in &elems {
            assert_eq!(f.add(a, b), f.add(b, a));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            for &c in &elems {
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

#[test]
fn field_axioms_exhaustive_up_to_nine() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        field_axioms(&FieldCtx::for_order(q).unwrap());
    }
}

#[test]
fn intersection_dimension_properties_gf3() {
    let f = FieldCtx::for_order(3).unwrap();
    let subs = enumerate_subspaces(&f, 3, 2, 2000).unwrap();
    for a in &subs {
        for b in &subs {
            let d = intersection_dim(&f, a, b).unwrap();
            assert_eq!(d, intersection_dim(&f, b, a).unwrap());
            // max(0, 2k - v) <= d <= k
            assert!((1..=2).contains(&d));
            assert_eq!(d == 2, a == b);
        }
    }
}
