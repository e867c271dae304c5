use proptest::prelude::*;

use acaa_core::algebra::{check_acaa, check_acaa_admissible, fingerprint, Symmetry};
use acaa_core::catalog;
use acaa_core::linalg::{rank_kernel, span};
use acaa_core::operad::{orthogonal_complement, MonomialSpace};
use acaa_core::sampling::Sampler;
use acaa_core::series::{InverseConvention, TruncatedSeries};
use acaa_core::{Algebra, FieldSpec, Matrix};

const Q: FieldSpec = FieldSpec::Rationals;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(Q),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(7).unwrap())
    ]
}

fn int_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn to_matrix(field: FieldSpec, rows: &[Vec<i64>]) -> Matrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Matrix::from_i64(field, &refs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_of_transpose(field in fields(), rows in int_matrix(6)) {
        let m = to_matrix(field, &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(field in fields(), rows in int_matrix(6)) {
        let m = to_matrix(field, &rows);
        let (rank, kernel) = rank_kernel(&m);
        prop_assert_eq!(rank + kernel.dim(), m.cols());
        for v in kernel.basis() {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rref_is_idempotent(field in fields(), rows in int_matrix(6)) {
        let mut m = to_matrix(field, &rows);
        let pivots = m.rref_in_place();
        let once = m.clone();
        prop_assert_eq!(m.rref_in_place(), pivots);
        prop_assert_eq!(m, once);
    }

    #[test]
    fn polarization_recombines(entries in prop::collection::vec(-2i64..=2, 27)) {
        let a = Algebra::new(Q, 3, entries.iter().map(|&x| Q.from_i64(x)).collect(), Symmetry::None).unwrap();
        let (minus, plus) = a.polarize();
        let two = Q.from_i64(2);
        for ((m, p), x) in minus.tensor().iter().zip(plus.tensor()).zip(a.tensor()) {
            prop_assert_eq!(m + p, x * &two);
        }
    }

    #[test]
    fn admissibility_is_acaa_of_commutator(entries in prop::collection::vec(-1i64..=1, 27)) {
        let a = Algebra::new(Q, 3, entries.iter().map(|&x| Q.from_i64(x)).collect(), Symmetry::None).unwrap();
        let direct = check_acaa(&a.commutator_algebra()).unwrap().holds();
        prop_assert_eq!(check_acaa_admissible(&a).holds(), direct);
    }

    #[test]
    fn fingerprint_is_basis_independent(idx in 0usize..12, seed in any::<u64>()) {
        let e = &catalog::all_entries()[idx];
        let p = Sampler::new(seed).invertible(Q, e.algebra.dim());
        let moved = e.algebra.change_basis(&p).unwrap();
        prop_assert_eq!(fingerprint(&moved), e.fingerprint);
        prop_assert!(check_acaa(&moved).unwrap().holds());
    }

    #[test]
    fn inverse_composes_to_identity(
        c1 in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
        rest in prop::collection::vec((-5i64..=5, 1i64..=4), 5),
    ) {
        let mut coeffs = vec![(c1, 1)];
        coeffs.extend(rest);
        let f = TruncatedSeries::from_ratios(&coeffs);
        let u = f.compositional_inverse(InverseConvention::Direct).unwrap();
        let t = TruncatedSeries::t(f.order());
        prop_assert_eq!(f.compose(&u), t.clone());
        prop_assert_eq!(u.compose(&f), t);
    }

    #[test]
    fn orthogonal_complement_is_an_involution(vectors in prop::collection::vec(prop::collection::vec(-2i64..=2, 12), 0..12)) {
        let vs = vectors.iter().map(|v| v.iter().map(|&x| Q.from_i64(x)).collect()).collect();
        let v = span(Q, vs, 12).unwrap();
        let perp = orthogonal_complement(MonomialSpace::Full12, &v).unwrap();
        prop_assert_eq!(v.dim() + perp.dim(), 12);
        prop_assert_eq!(orthogonal_complement(MonomialSpace::Full12, &perp).unwrap(), v);
    }

    #[test]
    fn json_round_trip(idx in 0usize..12) {
        let a = &catalog::all_entries()[idx].algebra;
        let back = Algebra::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back.tensor(), a.tensor());
        prop_assert_eq!(back.dim(), a.dim());
    }
}
