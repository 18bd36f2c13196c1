//! Ordinary character tables by the Dixon-Schneider method, class functions,
//! permutation characters, structure constants, and the two-class generation
//! criterion.
//!
//! Class multiplication matrices are diagonalized simultaneously over a
//! prime field GF(p) with p = 1 (mod exp(G)) and p > 2 sqrt(|G|); the
//! eigenvector entries determine the characters modulo p, which lift
//! unambiguously to exact cyclotomic values through the discrete Fourier sum
//! over the power map.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::algebra::cyclotomic::Cyclotomic;
use crate::algebra::ff::{is_prime_u64, FiniteField};
use crate::algebra::fmat::FMat;
use crate::algebra::poly;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};
use crate::gset::right_cosets;
use crate::perm::{PermGroup, Permutation};

/// An ordinary character table with class metadata.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub order: u64,
    pub exponent: u64,
    pub class_names: Vec<String>,
    pub class_sizes: Vec<u64>,
    pub centralizer_orders: Vec<u64>,
    pub element_orders: Vec<u64>,
    /// For each prime dividing the exponent, the class of the p-th powers.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    /// Rows are irreducible characters; the trivial character comes first,
    /// the rest sorted by degree and then by value vectors.
    pub irreducibles: Vec<Vec<Cyclotomic>>,
    /// Class of the inverses of each class.
    pub inverse_class: Vec<usize>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.class_names.len()
    }

    pub fn degree(&self, row: usize) -> u64 {
        degree_of(&self.irreducibles[row])
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.irreducibles.len()).map(|i| self.degree(i)).collect()
    }

    /// Exact row and column orthogonality; an internal error means the table
    /// is wrong.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let k = self.class_count();
        for a in 0..k {
            for b in 0..k {
                let inner = scalar_product_values(self, &self.irreducibles[a], &self.irreducibles[b])?;
                let expected = if a == b { Cyclotomic::one() } else { Cyclotomic::zero() };
                if inner != expected {
                    return Err(Error::Internal(alloc::format!(
                        "row orthogonality fails at ({a}, {b})"
                    )));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let mut acc = Cyclotomic::zero();
                for row in &self.irreducibles {
                    acc = acc.add(&row[c].mul(&row[d].conj()));
                }
                let expected = if c == d {
                    Cyclotomic::from_integer(self.centralizer_orders[c] as i64)
                } else {
                    Cyclotomic::zero()
                };
                if acc != expected {
                    return Err(Error::Internal(alloc::format!(
                        "column orthogonality fails at ({c}, {d})"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn degree_of(row: &[Cyclotomic]) -> u64 {
    use num_traits::ToPrimitive;
    row[0]
        .as_rational()
        .and_then(|q| if q.is_integer() { q.numer().to_u64() } else { None })
        .expect("character degree is a positive integer")
}

/// A class function as its vector of values in table class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

/// The Dixon prime: smallest prime p = 1 (mod m) with p^2 > 4|G|.
fn dixon_prime(order: u64, exponent: u64) -> u64 {
    let mut p = exponent + 1;
    loop {
        if p > 2 && is_prime_u64(p) && p * p > 4 * order {
            return p;
        }
        p += exponent;
    }
}

fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = (x + 1) / 2;
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

/// Computes the ordinary character table by Dixon-Schneider.
pub fn character_table(g: &PermGroup, cap: u64) -> Result<CharacterTable> {
    let classes = g.conjugacy_classes(cap)?;
    let k = classes.count();
    let order = g.order() as u64;
    let exponent = classes
        .element_orders()
        .iter()
        .fold(1u64, |a, &b| num_integer::lcm(a, b));

    let inverse_class: Vec<usize> = (0..k).map(|i| classes.power_class(i, -1)).collect();
    let mut power_maps = BTreeMap::new();
    {
        let mut m = exponent;
        let mut q = 2;
        while m > 1 {
            if m % q == 0 {
                power_maps.insert(q, (0..k).map(|i| classes.power_class(i, q as i64)).collect());
                while m % q == 0 {
                    m /= q;
                }
            }
            q += 1;
        }
    }

    if k == 1 {
        return Ok(CharacterTable {
            order,
            exponent,
            class_names: classes.names(),
            class_sizes: classes.sizes(),
            centralizer_orders: classes.centralizer_orders(),
            element_orders: classes.element_orders(),
            power_maps,
            irreducibles: alloc::vec![alloc::vec![Cyclotomic::one()]],
            inverse_class,
        });
    }

    let p = dixon_prime(order, exponent);
    let field = FiniteField::new(p, 1)?;

    // class multiplication coefficients: n_i[t][j] = a_{i j t} so that row
    // eigenvectors satisfy u * N_i = omega_i * u
    let mut mats: Vec<FMat> = alloc::vec![FMat::zero(k, k); k];
    for t in 0..k {
        let z = classes.classes[t].rep.clone();
        for i in 0..k {
            for x in &classes.classes[i].members {
                let y = x.inverse().mul(&z);
                let j = classes
                    .class_of(&y)
                    .ok_or_else(|| Error::Internal(String::from("class lookup failed")))?;
                let cur = mats[i][(t, j)];
                mats[i][(t, j)] = field.add(cur, 1);
            }
        }
    }

    // simultaneous eigenspaces over GF(p)
    let mut spaces: Vec<FMat> = alloc::vec![FMat::identity(k)];
    for n_i in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.rows == 1) {
            break;
        }
        let mut next: Vec<FMat> = Vec::new();
        for space in spaces {
            if space.rows == 1 {
                next.push(space);
                continue;
            }
            let restricted = restrict(&field, &space, n_i)?;
            let cp = restricted.charpoly(&field);
            let mut rng = ChaCha12Rng::seed_from_u64(0);
            let roots = poly::roots(&field, &cp, &mut rng);
            if roots.len() <= 1 {
                next.push(space);
                continue;
            }
            let mut total = 0;
            for lam in roots {
                let shifted = restricted.sub(&field, &FMat::scalar(restricted.rows, lam));
                let kernel = shifted.left_nullspace(&field);
                total += kernel.len();
                if kernel.is_empty() {
                    continue;
                }
                let rows: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|y| {
                        FMat::from_rows(alloc::vec![y.clone()])
                            .mul(&field, &space)
                            .row(0)
                            .to_vec()
                    })
                    .collect();
                next.push(FMat::from_rows(rows));
            }
            if total != restricted.rows {
                return Err(Error::Internal(String::from(
                    "class matrix restriction is not diagonalizable",
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.rows != 1) {
        return Err(Error::Internal(String::from(
            "simultaneous eigenspace splitting did not reach dimension one",
        )));
    }

    // translate eigenvectors into characters modulo p, then lift
    let sizes = classes.sizes();
    let z = field.pow(field.primitive_element(), (p - 1) / exponent);
    let sqrt_bound = isqrt(order);
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::with_capacity(k);
    for space in &spaces {
        let mut u = space.row(0).to_vec();
        if u[0] == 0 {
            return Err(Error::Internal(String::from(
                "eigenvector vanishes on the identity class",
            )));
        }
        let norm = field.inv(u[0]);
        for x in u.iter_mut() {
            *x = field.mul(*x, norm);
        }
        // degree from the orthogonality relation
        let mut s = 0u64;
        for j in 0..k {
            let term = field.mul(u[j], u[inverse_class[j]]);
            let term = field.mul(term, field.inv(field.from_int(sizes[j] as i64)));
            s = field.add(s, term);
        }
        let d2 = field.mul(field.from_int(order as i64), field.inv(s));
        let mut degree = 0u64;
        for t in 1..=sqrt_bound {
            if field.mul(field.from_int(t as i64), field.from_int(t as i64)) == d2 {
                degree = t;
                break;
            }
        }
        if degree == 0 {
            return Err(Error::Internal(String::from("no integral degree matches")));
        }
        // theta[j] = chi(g_j) mod p
        let theta: Vec<u64> = (0..k)
            .map(|j| {
                let c = field.mul(u[j], field.from_int(degree as i64));
                field.mul(c, field.inv(field.from_int(sizes[j] as i64)))
            })
            .collect();
        // lift every class value through the discrete Fourier sum
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let o = classes.element_orders()[j];
            let zj = field.pow(z, exponent / o);
            let zj_inv = field.inv(zj);
            let inv_o = field.inv(field.from_int(o as i64));
            let mut value = Cyclotomic::zero();
            let mut mult_sum = 0u64;
            for t in 0..o {
                let mut acc = 0u64;
                for s_exp in 0..o {
                    let cls = classes.power_class(j, s_exp as i64);
                    let w = field.pow(zj_inv, (s_exp * t) % o);
                    acc = field.add(acc, field.mul(theta[cls], w));
                }
                let mult = field.mul(acc, inv_o);
                if mult > degree {
                    return Err(Error::Internal(String::from(
                        "eigenvalue multiplicity exceeds the degree",
                    )));
                }
                mult_sum += mult;
                if mult > 0 {
                    value = value.add(
                        &Cyclotomic::root_of_unity(o as u32, t as i64)
                            .scale(&Rational::from_integer(num_bigint::BigInt::from(mult))),
                    );
                }
            }
            if mult_sum != degree {
                return Err(Error::Internal(String::from(
                    "eigenvalue multiplicities do not sum to the degree",
                )));
            }
            row.push(value);
        }
        rows.push(row);
    }

    // trivial character first, the rest by (degree, value vector)
    let ambient = exponent as u32;
    rows.sort_by(|a, b| {
        let da = degree_of(a);
        let db = degree_of(b);
        da.cmp(&db).then_with(|| {
            for (x, y) in a.iter().zip(b.iter()) {
                let ord = x.cmp_in(y, ambient);
                if ord != core::cmp::Ordering::Equal {
                    return ord;
                }
            }
            core::cmp::Ordering::Equal
        })
    });
    let trivial_pos = rows
        .iter()
        .position(|row| row.iter().all(|v| *v == Cyclotomic::one()))
        .ok_or_else(|| Error::Internal(String::from("trivial character missing")))?;
    let trivial = rows.remove(trivial_pos);
    rows.insert(0, trivial);

    Ok(CharacterTable {
        order,
        exponent,
        class_names: classes.names(),
        class_sizes: classes.sizes(),
        centralizer_orders: classes.centralizer_orders(),
        element_orders: classes.element_orders(),
        power_maps,
        irreducibles: rows,
        inverse_class,
    })
}

fn restrict(field: &FiniteField, space: &FMat, n: &FMat) -> Result<FMat> {
    let image = space.mul(field, n);
    let mut rows = Vec::with_capacity(space.rows);
    for r in 0..space.rows {
        let x = solve_row_combination(field, space, image.row(r)).ok_or_else(|| {
            Error::Internal(String::from("eigenspace is not invariant under a class matrix"))
        })?;
        rows.push(x);
    }
    Ok(FMat::from_rows(rows))
}

/// Solves x * basis = target for a full-row-rank basis.
fn solve_row_combination(field: &FiniteField, basis: &FMat, target: &[u64]) -> Option<Vec<u64>> {
    let d = basis.rows;
    let k = basis.cols;
    // augmented transpose system basis^T x^T = target^T
    let mut aug = FMat::zero(k, d + 1);
    for i in 0..k {
        for j in 0..d {
            aug[(i, j)] = basis[(j, i)];
        }
        aug[(i, d)] = target[i];
    }
    let pivots = aug.rref(field);
    let mut x = alloc::vec![0u64; d];
    for (r, &c) in pivots.iter().enumerate() {
        if c == d {
            return None; // inconsistent
        }
        x[c] = aug[(r, d)];
    }
    // verify (the system is overdetermined)
    let back = FMat::from_rows(alloc::vec![x.clone()]).mul(field, basis);
    if back.row(0) == target {
        Some(x)
    } else {
        None
    }
}

/// (1/|G|) sum_c |C_c| x(c) conj(y(c)).
pub fn scalar_product_values(
    table: &CharacterTable,
    x: &[Cyclotomic],
    y: &[Cyclotomic],
) -> Result<Cyclotomic> {
    if x.len() != table.class_count() || y.len() != table.class_count() {
        return Err(Error::Invalid(String::from("class function length mismatch")));
    }
    let mut acc = Cyclotomic::zero();
    for c in 0..table.class_count() {
        let term = x[c]
            .mul(&y[c].conj())
            .scale(&Rational::from_integer(num_bigint::BigInt::from(
                table.class_sizes[c],
            )));
        acc = acc.add(&term);
    }
    Ok(acc.scale(&Rational::new(1.into(), num_bigint::BigInt::from(table.order))))
}

pub fn scalar_product(
    table: &CharacterTable,
    x: &ClassFunction,
    y: &ClassFunction,
) -> Result<Cyclotomic> {
    scalar_product_values(table, &x.values, &y.values)
}

/// The permutation character of the action on the cosets of u: its value at
/// a class counts the fixed cosets of a representative.
pub fn permutation_character(
    g: &PermGroup,
    u: &PermGroup,
    table: &CharacterTable,
    cap: u64,
) -> Result<ClassFunction> {
    let gs = right_cosets(g, u, cap)?;
    let domain: Vec<_> = gs.domain().to_vec();
    let classes = g.conjugacy_classes(cap)?;
    let mut values = Vec::with_capacity(table.class_count());
    for class in &classes.classes {
        let rep = &class.rep;
        let fixed = domain.iter().filter(|x| gs.apply(x, rep) == **x).count();
        values.push(Cyclotomic::from_integer(fixed as i64));
    }
    Ok(ClassFunction { values })
}

/// Number of ways a fixed element of class c3 factors as a product from
/// classes c1 and c2, by the structure-constant formula.
pub fn class_mult_coefficient(
    table: &CharacterTable,
    c1: usize,
    c2: usize,
    c3: usize,
) -> Result<u64> {
    use num_traits::ToPrimitive;
    let k = table.class_count();
    if c1 >= k || c2 >= k || c3 >= k {
        return Err(Error::Invalid(String::from("class index out of range")));
    }
    let c3_inv = table.inverse_class[c3];
    let mut acc = Cyclotomic::zero();
    for row in &table.irreducibles {
        let num = row[c1].mul(&row[c2]).mul(&row[c3_inv]);
        let deg = Rational::from_integer(num_bigint::BigInt::from(degree_of(row)));
        acc = acc.add(&num.scale(&deg.recip()));
    }
    let factor = Rational::new(
        num_bigint::BigInt::from(table.class_sizes[c1] * table.class_sizes[c2]),
        num_bigint::BigInt::from(table.order),
    );
    let total = acc.scale(&factor);
    let q = total
        .as_rational()
        .ok_or_else(|| Error::Internal(String::from("structure constant is not rational")))?;
    if !q.is_integer() || q.numer().sign() == num_bigint::Sign::Minus {
        return Err(Error::Internal(String::from(
            "structure constant is not a nonnegative integer",
        )));
    }
    q.numer()
        .to_u64()
        .ok_or_else(|| Error::Internal(String::from("structure constant overflows u64")))
}

/// Result of the generation question for a pair of classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenerationOutcome {
    AllPairsGenerate,
    NoPairGenerates,
    Mixed {
        generating: (Permutation, Permutation),
        non_generating: (Permutation, Permutation),
    },
}

#[derive(Clone, Debug)]
pub struct GenerationCheck {
    pub outcome: GenerationOutcome,
    /// True when the permutation-character criterion alone settled it.
    pub by_criterion: bool,
}

/// Applies the permutation-character criterion over the maximal subgroup
/// classes; when inconclusive, decides by exhaustive pair checking.
pub fn generation_check(
    g: &PermGroup,
    table: &CharacterTable,
    c1: usize,
    c2: usize,
    cap: u64,
) -> Result<GenerationCheck> {
    let order = g.order();
    let classes = g.conjugacy_classes(cap)?;
    let subgroups = g.subgroup_classes(cap)?;

    // maximal proper subgroup classes
    let proper: Vec<_> = subgroups
        .iter()
        .filter(|c| (c.order as u128) < order)
        .collect();
    let elements = g.elements(cap)?;
    let mut maximal = Vec::new();
    for u in &proper {
        let mut is_max = true;
        'outer: for v in &proper {
            if v.order <= u.order {
                continue;
            }
            // u contained in some conjugate of v?
            for t in elements {
                if u.rep
                    .generators()
                    .iter()
                    .all(|s| v.rep.contains(&s.conjugate_by(t)).unwrap_or(false))
                {
                    is_max = false;
                    break 'outer;
                }
            }
        }
        if is_max {
            maximal.push(u);
        }
    }

    let mut criterion_applies = true;
    for m in &maximal {
        let pc = permutation_character(g, &m.rep, table, cap)?;
        let z1 = pc.values[c1].is_zero();
        let z2 = pc.values[c2].is_zero();
        if !z1 && !z2 {
            criterion_applies = false;
            break;
        }
    }
    if criterion_applies {
        return Ok(GenerationCheck {
            outcome: GenerationOutcome::AllPairsGenerate,
            by_criterion: true,
        });
    }

    // exhaustive fallback
    let mut generating: Option<(Permutation, Permutation)> = None;
    let mut non_generating: Option<(Permutation, Permutation)> = None;
    for x in &classes.classes[c1].members {
        for y in &classes.classes[c2].members {
            let sub = PermGroup::new(g.degree(), alloc::vec![x.clone(), y.clone()])?;
            if sub.order() == order {
                generating.get_or_insert((x.clone(), y.clone()));
            } else {
                non_generating.get_or_insert((x.clone(), y.clone()));
            }
            if generating.is_some() && non_generating.is_some() {
                break;
            }
        }
    }
    let outcome = match (generating, non_generating) {
        (Some(_), None) => GenerationOutcome::AllPairsGenerate,
        (None, Some(_)) => GenerationOutcome::NoPairGenerates,
        (Some(g1), Some(g2)) => GenerationOutcome::Mixed {
            generating: g1,
            non_generating: g2,
        },
        (None, None) => {
            return Err(Error::Internal(String::from("classes cannot be empty")))
        }
    };
    Ok(GenerationCheck {
        outcome,
        by_criterion: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{alternating_group, cyclic_group, symmetric_group, PermGroup};

    #[test]
    fn trivial_table() {
        let t = character_table(&PermGroup::trivial(1), 10).unwrap();
        assert_eq!(t.irreducibles.len(), 1);
        assert_eq!(t.irreducibles[0][0], Cyclotomic::one());
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn s3_table() {
        let t = character_table(&symmetric_group(3), 100).unwrap();
        let mut degrees = t.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, alloc::vec![1, 1, 2]);
        t.verify_orthogonality().unwrap();
        // the degree-2 character takes values (2, 0, -1) on (1a, 2a, 3a)
        let row = t
            .irreducibles
            .iter()
            .find(|r| degree_of(r) == 2)
            .unwrap();
        assert_eq!(t.class_names, alloc::vec!["1a", "2a", "3a"]);
        assert_eq!(row[0], Cyclotomic::from_integer(2));
        assert_eq!(row[1], Cyclotomic::zero());
        assert_eq!(row[2], Cyclotomic::from_integer(-1));
    }

    #[test]
    fn c4_table_has_exact_roots_of_unity() {
        let t = character_table(&cyclic_group(4), 100).unwrap();
        assert_eq!(t.degrees(), alloc::vec![1, 1, 1, 1]);
        t.verify_orthogonality().unwrap();
        // some row contains i = z4
        let i = Cyclotomic::root_of_unity(4, 1);
        assert!(t.irreducibles.iter().any(|row| row.contains(&i)));
    }

    #[test]
    fn s4_table() {
        let t = character_table(&symmetric_group(4), 100).unwrap();
        let mut degrees = t.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, alloc::vec![1, 1, 2, 3, 3]);
        t.verify_orthogonality().unwrap();
        // sum of squared degrees is the group order
        let total: u64 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn a5_table() {
        let t = character_table(&alternating_group(5), 1000).unwrap();
        let mut degrees = t.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, alloc::vec![1, 3, 3, 4, 5]);
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn first_row_is_trivial_everywhere() {
        for g in [symmetric_group(4), cyclic_group(6), alternating_group(4)] {
            let t = character_table(&g, 1000).unwrap();
            assert!(t.irreducibles[0].iter().all(|v| *v == Cyclotomic::one()));
            // degrees divide the group order
            for d in t.degrees() {
                assert_eq!(t.order % d, 0);
            }
        }
    }

    #[test]
    fn power_map_semantics() {
        let t = character_table(&symmetric_group(4), 100).unwrap();
        let classes = symmetric_group(4);
        let cc = classes.conjugacy_classes(100).unwrap();
        let pm2 = &t.power_maps[&2];
        for (i, c) in cc.classes.iter().enumerate() {
            assert_eq!(cc.class_of(&c.rep.pow(2)).unwrap(), pm2[i]);
        }
    }

    #[test]
    fn permutation_characters_of_s3() {
        let s3 = symmetric_group(3);
        let t = character_table(&s3, 100).unwrap();
        let u = PermGroup::new(3, alloc::vec![crate::perm::parse_cycles("(1,2)", 3).unwrap()])
            .unwrap();
        let pc = permutation_character(&s3, &u, &t, 100).unwrap();
        assert_eq!(
            pc.values,
            alloc::vec![
                Cyclotomic::from_integer(3),
                Cyclotomic::from_integer(1),
                Cyclotomic::zero()
            ]
        );
        // the whole group gives the trivial character
        let pc = permutation_character(&s3, &s3, &t, 100).unwrap();
        assert!(pc.values.iter().all(|v| *v == Cyclotomic::one()));
        // the trivial subgroup gives the regular character
        let pc = permutation_character(&s3, &PermGroup::trivial(3), &t, 100).unwrap();
        assert_eq!(pc.values[0], Cyclotomic::from_integer(6));
        assert!(pc.values[1..].iter().all(|v| v.is_zero()));
        // <1_U^G, 1> = 1 by transitivity of the coset action
        let u_pc = permutation_character(&s3, &u, &t, 100).unwrap();
        let triv = ClassFunction {
            values: alloc::vec![Cyclotomic::one(); 3],
        };
        assert_eq!(
            scalar_product(&t, &u_pc, &triv).unwrap(),
            Cyclotomic::one()
        );
    }

    #[test]
    fn norms_of_irreducibles_are_one() {
        let t = character_table(&symmetric_group(4), 100).unwrap();
        for row in &t.irreducibles {
            let f = ClassFunction { values: row.clone() };
            assert_eq!(scalar_product(&t, &f, &f).unwrap(), Cyclotomic::one());
        }
    }

    #[test]
    fn class_mult_coefficients() {
        // (1a, C, C) -> 1: only the identity can pair
        let s3 = symmetric_group(3);
        let t = character_table(&s3, 100).unwrap();
        assert_eq!(class_mult_coefficient(&t, 0, 1, 1).unwrap(), 1);
        // product of two transpositions in S3 is never a transposition
        assert_eq!(class_mult_coefficient(&t, 1, 1, 1).unwrap(), 0);
        // but it can be a 3-cycle
        assert!(class_mult_coefficient(&t, 1, 1, 2).unwrap() > 0);
    }

    #[test]
    fn class_mult_matches_brute_force() {
        for g in [symmetric_group(3), symmetric_group(4), alternating_group(4)] {
            let t = character_table(&g, 1000).unwrap();
            let cc = g.conjugacy_classes(1000).unwrap();
            for c1 in 0..t.class_count() {
                for c2 in 0..t.class_count() {
                    for c3 in 0..t.class_count() {
                        let z = &cc.classes[c3].rep;
                        let mut count = 0u64;
                        for x in &cc.classes[c1].members {
                            let y = x.inverse().mul(z);
                            if cc.class_of(&y) == Some(c2) {
                                count += 1;
                            }
                        }
                        assert_eq!(
                            class_mult_coefficient(&t, c1, c2, c3).unwrap(),
                            count,
                            "triple ({c1},{c2},{c3}) in order {}",
                            t.order
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn a5_generation_by_criterion() {
        let a5 = alternating_group(5);
        let t = character_table(&a5, 1000).unwrap();
        // classes: 1a 2a 3a 5a 5b; pick 3a and 5a
        let c3 = t.element_orders.iter().position(|&o| o == 3).unwrap();
        let c5 = t.element_orders.iter().position(|&o| o == 5).unwrap();
        let res = generation_check(&a5, &t, c3, c5, 2000).unwrap();
        assert!(res.by_criterion);
        assert_eq!(res.outcome, GenerationOutcome::AllPairsGenerate);
    }

    #[test]
    fn c4_no_pair_generates() {
        let c4 = cyclic_group(4);
        let t = character_table(&c4, 100).unwrap();
        // the class of the generator's square is the unique order-2 class
        let c = t.element_orders.iter().position(|&o| o == 2).unwrap();
        let res = generation_check(&c4, &t, c, c, 2000).unwrap();
        assert_eq!(res.outcome, GenerationOutcome::NoPairGenerates);
    }

    #[test]
    fn s4_transpositions_and_four_cycles_mixed() {
        let s4 = symmetric_group(4);
        let t = character_table(&s4, 1000).unwrap();
        // 2b is the transposition class (the larger order-2 class)
        let c2b = 2;
        assert_eq!(t.class_sizes[c2b], 6);
        let c4 = t.element_orders.iter().position(|&o| o == 4).unwrap();
        let res = generation_check(&s4, &t, c2b, c4, 2000).unwrap();
        assert!(matches!(res.outcome, GenerationOutcome::Mixed { .. }));
        if let GenerationOutcome::Mixed {
            generating,
            non_generating,
        } = res.outcome
        {
            let g1 = PermGroup::new(4, alloc::vec![generating.0, generating.1]).unwrap();
            assert_eq!(g1.order(), 24);
            let g2 = PermGroup::new(4, alloc::vec![non_generating.0, non_generating.1]).unwrap();
            assert!(g2.order() < 24);
        }
        // double transpositions with 4-cycles always land in a 2-group
        let res = generation_check(&s4, &t, 1, c4, 2000).unwrap();
        assert_eq!(res.outcome, GenerationOutcome::NoPairGenerates);
    }
}
