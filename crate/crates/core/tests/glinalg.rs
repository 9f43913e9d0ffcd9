use proptest::prelude::*;
use reflectq::glinalg::{graded_permutation, kron_graded, nullspace, rank, row_reduce, ScalarMatrix};
use reflectq::Scalar;

fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => (-3i64..=3).prop_map(Scalar::int),
        1 => Just(Scalar::var("z")),
        1 => Just(Scalar::parse("q - z").unwrap()),
        1 => Just(Scalar::parse("1/(z + 1)").unwrap()),
        1 => Just(Scalar::parse("q^2*z - 1").unwrap()),
    ]
}

/// Random matrices, optionally with a row that is a z-multiple of another.
fn matrix() -> impl Strategy<Value = ScalarMatrix> {
    (1usize..4, 2usize..6, any::<bool>()).prop_flat_map(|(r, c, dependent)| {
        prop::collection::vec(prop::collection::vec(entry(), c), r).prop_map(move |mut rows| {
            if dependent {
                let z = Scalar::var("z");
                rows.push(rows[0].iter().map(|x| x.mul(&z)).collect());
            }
            ScalarMatrix::from_rows(rows).unwrap()
        })
    })
}

fn small() -> impl Strategy<Value = ScalarMatrix> {
    prop::collection::vec(entry(), 4).prop_map(|e| ScalarMatrix::from_rows(vec![e[..2].to_vec(), e[2..].to_vec()]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nullspace_vectors_are_annihilated(m in matrix()) {
        for x in nullspace(&m) {
            prop_assert!(m.mul(&x).is_zero());
        }
    }

    #[test]
    fn rank_plus_nullity_is_width(m in matrix()) {
        let e = row_reduce(&m);
        prop_assert_eq!(e.rank() + nullspace(&m).len(), m.cols());
        prop_assert_eq!(rank(&m), e.rank());
        prop_assert_eq!(rank(&m.transpose()), e.rank());
    }

    #[test]
    fn even_graded_kron_is_plain(a in small(), b in small(), pa in 0u8..2, pb in 0u8..2) {
        prop_assert_eq!(kron_graded(&a, pa, &b, pb, &[0, 0], &[0, 0]).unwrap(), a.kron(&b));
    }

    #[test]
    fn json_round_trips(m in matrix()) {
        prop_assert_eq!(ScalarMatrix::from_json(&m.to_json()).unwrap(), m);
    }
}

#[test]
fn koszul_signs_are_coherent() {
    let g = [0u8, 1];
    let id = ScalarMatrix::identity(2);
    let h = ScalarMatrix::diag(&[Scalar::one(), Scalar::int(-1)]);
    let ops = [(ScalarMatrix::unit(2, 1, 2), 1u8), (ScalarMatrix::unit(2, 2, 1), 1), (h, 0)];
    for (a, pa) in &ops {
        for (b, pb) in &ops {
            let left = kron_graded(a, *pa, &id, 0, &g, &g).unwrap();
            let right = kron_graded(&id, 0, b, *pb, &g, &g).unwrap();
            let both = kron_graded(a, *pa, b, *pb, &g, &g).unwrap();
            assert_eq!(left.mul(&right), both);
            let sign = if pa & pb == 1 { Scalar::int(-1) } else { Scalar::one() };
            assert_eq!(right.mul(&left), both.scale(&sign));
        }
    }
}

#[test]
fn graded_permutation_is_an_involution() {
    for g in [vec![0u8, 0], vec![0, 1]] {
        let p = graded_permutation(&g, &g);
        assert!(p.mul(&p).is_identity());
    }
}
