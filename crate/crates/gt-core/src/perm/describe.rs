//! Best-effort structure description for small permutation groups.

use alloc::string::String;
use alloc::vec::Vec;

use super::PermGroup;
use crate::error::Result;

/// Recognizes a short catalog of isomorphism types:
/// trivial, C n, E p^k (elementary abelian), D 2n (dihedral), S n / A n in
/// their natural degree, Q8; everything else reports order and abelian
/// invariants.
pub fn describe(g: &PermGroup, cap: u64) -> Result<String> {
    let order = g.order();
    if order == 1 {
        return Ok(String::from("trivial"));
    }
    let order = order as u64;
    let elements = g.elements(cap)?;
    let orders: Vec<u64> = elements.iter().map(|e| e.order()).collect();

    if orders.iter().any(|&o| o == order) {
        return Ok(alloc::format!("C {order}"));
    }

    if g.is_abelian() {
        if let Some((p, k)) = prime_power(order) {
            if orders.iter().all(|&o| o == 1 || o == p) {
                return Ok(alloc::format!("E {p}^{k}"));
            }
        }
    }

    // the natural symmetric or alternating group of the domain wins over
    // coincidental isomorphs (S3 on 3 points reports "S 3", not "D 6")
    let n = g.degree() as u64;
    let fact = factorial(n);
    if fact == Some(order as u128) {
        return Ok(alloc::format!("S {n}"));
    }
    if n >= 3 && fact == Some(order as u128 * 2) && g.generators().iter().all(|p| p.is_even()) {
        return Ok(alloc::format!("A {n}"));
    }

    if order % 2 == 0 && order >= 6 && is_dihedral(g, order, &orders) {
        return Ok(alloc::format!("D {order}"));
    }

    if order == 8 && orders.iter().filter(|&&o| o == 2).count() == 1 && !g.is_abelian() {
        return Ok(String::from("Q8"));
    }

    let invariants = abelian_invariants_of_quotient(g, cap)?;
    let inv_str: Vec<String> = invariants.iter().map(|d| alloc::format!("{d}")).collect();
    Ok(alloc::format!(
        "group of order {order} with abelian invariants [{}]",
        inv_str.join(", ")
    ))
}

fn factorial(n: u64) -> Option<u128> {
    let mut f: u128 = 1;
    for i in 2..=n as u128 {
        f = f.checked_mul(i)?;
    }
    Some(f)
}

fn prime_power(mut n: u64) -> Option<(u64, u32)> {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            return if n == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

fn is_dihedral(g: &PermGroup, order: u64, orders: &[u64]) -> bool {
    let half = order / 2;
    let elements = g.elements(order).unwrap();
    for (e, &o) in elements.iter().zip(orders) {
        if o != half {
            continue;
        }
        // rotation found; need an involution outside <e> inverting it
        for s in elements.iter() {
            if s.order() != 2 {
                continue;
            }
            let mut in_cyclic = false;
            let mut power = e.clone();
            for _ in 0..half {
                if &power == s {
                    in_cyclic = true;
                    break;
                }
                power = power.mul(e);
            }
            if in_cyclic {
                continue;
            }
            if e.conjugate_by(s) == e.inverse() {
                return true;
            }
        }
        return false;
    }
    false
}

/// Invariant factors of the abelianization G/G'.
pub fn abelian_invariants_of_quotient(g: &PermGroup, cap: u64) -> Result<Vec<u64>> {
    let derived = g.derived_subgroup();
    // work in the quotient via coset representatives
    let d_elems: alloc::collections::BTreeSet<Vec<u32>> = derived
        .elements(cap)?
        .iter()
        .map(|p| p.images().to_vec())
        .collect();
    let elements = g.elements(cap)?;
    // canonical coset key: minimal image vector in the coset
    let coset_key = |p: &super::Permutation| -> Vec<u32> {
        d_elems
            .iter()
            .map(|im| {
                super::Permutation::from_images(im.clone())
                    .unwrap()
                    .mul(p)
                    .images()
                    .to_vec()
            })
            .min()
            .unwrap()
    };
    let mut cosets: alloc::collections::BTreeMap<Vec<u32>, super::Permutation> =
        alloc::collections::BTreeMap::new();
    for e in elements {
        cosets.entry(coset_key(e)).or_insert_with(|| e.clone());
    }
    // peel off maximal-order cyclic factors
    let mut invariants = Vec::new();
    let mut reps: Vec<super::Permutation> = cosets.values().cloned().collect();
    let mut normal: alloc::collections::BTreeSet<Vec<u32>> = d_elems.clone();
    loop {
        let quotient_size = reps.len() as u64;
        if quotient_size == 1 {
            break;
        }
        // order of each coset in the current quotient
        let key = |p: &super::Permutation| -> Vec<u32> {
            normal
                .iter()
                .map(|im| {
                    super::Permutation::from_images(im.clone())
                        .unwrap()
                        .mul(p)
                        .images()
                        .to_vec()
                })
                .min()
                .unwrap()
        };
        let id_key = key(&super::Permutation::identity(g.degree()));
        let coset_order = |p: &super::Permutation| -> u64 {
            let mut acc = p.clone();
            let mut o = 1;
            while key(&acc) != id_key {
                acc = acc.mul(p);
                o += 1;
            }
            o
        };
        let (best, best_order) = reps
            .iter()
            .map(|p| (p.clone(), coset_order(p)))
            .max_by_key(|(_, o)| *o)
            .unwrap();
        invariants.push(best_order);
        // enlarge the normal subgroup by <best> and recompute representatives
        let mut enlarged = normal.clone();
        let mut power = best.clone();
        loop {
            let mut next: alloc::collections::BTreeSet<Vec<u32>> = enlarged.clone();
            for im in &enlarged {
                let q = super::Permutation::from_images(im.clone()).unwrap().mul(&power);
                next.insert(q.images().to_vec());
            }
            enlarged = next;
            if key(&power) == id_key {
                break;
            }
            power = power.mul(&best);
        }
        normal = enlarged;
        let key2 = |p: &super::Permutation| -> Vec<u32> {
            normal
                .iter()
                .map(|im| {
                    super::Permutation::from_images(im.clone())
                        .unwrap()
                        .mul(p)
                        .images()
                        .to_vec()
                })
                .min()
                .unwrap()
        };
        let mut new_reps: alloc::collections::BTreeMap<Vec<u32>, super::Permutation> =
            alloc::collections::BTreeMap::new();
        for r in &reps {
            new_reps.entry(key2(r)).or_insert_with(|| r.clone());
        }
        reps = new_reps.values().cloned().collect();
    }
    // divisibility order, smallest first
    invariants.reverse();
    Ok(invariants)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{
        alternating_group, cyclic_group, dihedral_group, parse_cycles, quaternion_group, sl2_5,
        symmetric_group, PermGroup,
    };

    #[test]
    fn describe_catalog() {
        assert_eq!(PermGroup::trivial(1).describe(10).unwrap(), "trivial");
        assert_eq!(cyclic_group(3).describe(100).unwrap(), "C 3");
        assert_eq!(dihedral_group(10).unwrap().describe(100).unwrap(), "D 10");
        assert_eq!(dihedral_group(4).unwrap().describe(100).unwrap(), "E 2^2");
        assert_eq!(symmetric_group(4).describe(100).unwrap(), "S 4");
        assert_eq!(alternating_group(5).describe(100).unwrap(), "A 5");
        assert_eq!(quaternion_group().describe(100).unwrap(), "Q8");
        let e8 = PermGroup::new(
            6,
            alloc::vec![
                parse_cycles("(1,2)", 6).unwrap(),
                parse_cycles("(3,4)", 6).unwrap(),
                parse_cycles("(5,6)", 6).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(e8.describe(100).unwrap(), "E 2^3");
    }

    #[test]
    fn describe_perfect_group() {
        assert_eq!(
            sl2_5().describe(1000).unwrap(),
            "group of order 120 with abelian invariants []"
        );
    }

    #[test]
    fn describe_fallback_reports_abelian_invariants() {
        // the dicyclic group of order 12 is none of the catalog types
        let dic3 = PermGroup::new(
            7,
            alloc::vec![
                parse_cycles("(1,2,3)", 7).unwrap(),
                parse_cycles("(2,3)(4,5,6,7)", 7).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(dic3.order(), 12);
        assert_eq!(
            dic3.describe(100).unwrap(),
            "group of order 12 with abelian invariants [4]"
        );
        // A4 in its natural degree is recognized directly
        assert_eq!(alternating_group(4).describe(100).unwrap(), "A 4");
    }

    #[test]
    fn abelian_invariants_examples() {
        let c6 = cyclic_group(6);
        // C6 is cyclic so describe short-circuits; invariants still work
        assert_eq!(abelian_invariants_of_quotient(&c6, 100).unwrap(), alloc::vec![6]);
        let v4 = dihedral_group(4).unwrap();
        assert_eq!(abelian_invariants_of_quotient(&v4, 100).unwrap(), alloc::vec![2, 2]);
        let s4 = symmetric_group(4);
        assert_eq!(abelian_invariants_of_quotient(&s4, 100).unwrap(), alloc::vec![2]);
    }
}
