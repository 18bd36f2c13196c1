//! Property tests for the exact arithmetic substrate.

use gt_core::algebra::cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
use gt_core::algebra::intmat::{smith_normal_form, IntMatrix};
use gt_core::algebra::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        // normalization is idempotent: re-building from parts is identical
        let rebuilt = Rational::new(a.numer().clone(), a.denom().clone());
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn cyclotomic_ring_laws(
        n in prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]),
        ea in 0i64..12, eb in 0i64..12, qa in -3i64..4, qb in -3i64..4,
    ) {
        let a = Cyclotomic::root_of_unity(n, ea).scale(&Rational::from_integer(BigInt::from(qa)));
        let b = Cyclotomic::root_of_unity(n, eb).scale(&Rational::from_integer(BigInt::from(qb)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.sub(&a), Cyclotomic::zero());
        // conjugation is a ring homomorphism
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
    }

    #[test]
    fn minimal_polynomial_annihilates_every_conductor(n in 1u32..30) {
        let z = Cyclotomic::root_of_unity(n, 1);
        let phi = cyclotomic_polynomial(n);
        prop_assert_eq!(phi.len() as u32, euler_phi(n) + 1);
        let mut acc = Cyclotomic::zero();
        for (i, c) in phi.iter().enumerate() {
            acc = acc.add(&z.pow(i as u64).scale(&Rational::from_integer(c.clone())));
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn snf_reverification(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        // deterministic small matrix from the seed
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 7) - 3
        };
        let mut m = IntMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = BigInt::from(next());
            }
        }
        let snf = smith_normal_form(&m);
        // U A V = D, recomputed by multiplication
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
        prop_assert_eq!(snf.v.mul(&snf.vinv), IntMatrix::identity(cols));
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(!w[0].is_zero());
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    prop_assert!(snf.d[(i, j)].is_zero());
                }
            }
        }
    }
}

#[test]
fn nullspace_dimension_plus_rank_is_columns() {
    use gt_core::algebra::ff::FiniteField;
    use gt_core::algebra::fmat::FMat;
    let f = FiniteField::new(5, 1).unwrap();
    let mut state = 12345u64;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
        (state >> 33) % 5
    };
    for rows in 1..6 {
        for cols in 1..6 {
            for _ in 0..5 {
                let m = FMat::from_rows((0..rows).map(|_| (0..cols).map(|_| next()).collect()).collect());
                let ns = m.nullspace(&f);
                assert_eq!(m.rank(&f) + ns.len(), cols);
                for v in &ns {
                    for r in 0..rows {
                        let mut acc = 0;
                        for c in 0..cols {
                            acc = f.add(acc, f.mul(m[(r, c)], v[c]));
                        }
                        assert_eq!(acc, 0);
                    }
                }
            }
        }
    }
}

#[test]
fn finite_field_primitive_elements_are_deterministic() {
    use gt_core::algebra::ff::FiniteField;
    for (p, k) in [(2u64, 1u32), (3, 1), (5, 1), (7, 1), (13, 1), (2, 2), (3, 2), (5, 2)] {
        let a = FiniteField::new(p, k).unwrap();
        let b = FiniteField::new(p, k).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.primitive_element(), b.primitive_element());
        if a.order() > 2 {
            assert_eq!(a.element_order(a.primitive_element()), a.order() - 1);
        }
    }
}
