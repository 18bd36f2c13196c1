//! G-modules over finite fields: MeatAxe-style chopping into composition
//! factors, and the extension/induction walk that produces all absolutely
//! irreducible representations of a finite pc-group over a splitting field
//! GF(q) with q = 1 (mod exp(G)).
//!
//! Matrices act on row vectors from the right, and representations are
//! multiplicative: rho(xy) = rho(x) rho(y).

use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::algebra::cyclotomic::Cyclotomic;
use crate::algebra::ff::FiniteField;
use crate::algebra::fmat::{FMat, RowSpan};
use crate::algebra::poly;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};
use crate::pcgrp::{PcElem, PcGroup, PcPresentation};
use crate::perm::{PermGroup, Permutation};

/// A module over a finite field: one invertible matrix per group generator.
#[derive(Clone, Debug)]
pub struct FModule {
    pub field: FiniteField,
    pub dim: usize,
    pub gens: Vec<FMat>,
}

impl FModule {
    pub fn new(field: FiniteField, dim: usize, gens: Vec<FMat>) -> Result<FModule> {
        for g in &gens {
            if g.rows != dim || g.cols != dim {
                return Err(Error::Invalid(String::from("module matrix shape mismatch")));
            }
            if g.inverse(&field).is_none() {
                return Err(Error::Invalid(String::from("module matrix is singular")));
            }
        }
        Ok(FModule { field, dim, gens })
    }

    /// Evaluates the representation on an exponent vector over its own
    /// generator list.
    pub fn eval(&self, exponents: &[u64]) -> FMat {
        let mut acc = FMat::identity(self.dim);
        for (i, &f) in exponents.iter().enumerate() {
            if f != 0 {
                acc = acc.mul(&self.field, &self.gens[i].pow(&self.field, f));
            }
        }
        acc
    }

    fn eval_word(&self, w: &[(usize, u64)]) -> FMat {
        let mut acc = FMat::identity(self.dim);
        for &(j, f) in w {
            acc = acc.mul(&self.field, &self.gens[j].pow(&self.field, f));
        }
        acc
    }
}

/// The permutation module of the given permutations over a field.
pub fn permutation_module(field: FiniteField, perms: &[Permutation]) -> Result<FModule> {
    let degree = perms.first().map(|p| p.degree()).unwrap_or(1) as usize;
    let gens = perms
        .iter()
        .map(|p| {
            let mut m = FMat::zero(degree, degree);
            for i in 0..degree {
                m[(i, (p.apply(i as u32 + 1) - 1) as usize)] = 1;
            }
            m
        })
        .collect();
    FModule::new(field, degree, gens)
}

/// The regular module of a permutation group: basis indexed by the elements
/// in closure order, generators acting by right multiplication.
pub fn regular_module(field: FiniteField, g: &PermGroup, cap: u64) -> Result<FModule> {
    let elements = g.elements(cap)?;
    let index: alloc::collections::BTreeMap<&[u32], usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.images(), i))
        .collect();
    let dim = elements.len();
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            let mut m = FMat::zero(dim, dim);
            for (i, e) in elements.iter().enumerate() {
                let j = index[e.mul(s).images()];
                m[(i, j)] = 1;
            }
            m
        })
        .collect();
    FModule::new(field, dim, gens)
}

/// Smallest invariant subspace containing v, as an echelonized basis.
pub fn spin(field: &FiniteField, gens: &[FMat], v: &[u64]) -> Vec<Vec<u64>> {
    assert!(v.iter().any(|&x| x != 0), "cannot spin the zero vector");
    let mut span = RowSpan::new();
    span.insert(field, v.to_vec());
    let mut queue = alloc::vec![span.basis[0].clone()];
    while let Some(w) = queue.pop() {
        for g in gens {
            // row times matrix: w * g
            let u = {
                let mut out = alloc::vec![0u64; w.len()];
                for (i, &c) in w.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    for j in 0..w.len() {
                        let a = g[(i, j)];
                        if a != 0 {
                            out[j] = field.add(out[j], field.mul(c, a));
                        }
                    }
                }
                out
            };
            if span.insert(field, u.clone()) {
                queue.push(span.basis.last().unwrap().clone());
            }
        }
    }
    span.basis
}

enum Split {
    Irreducible,
    Submodule(Vec<Vec<u64>>),
}

fn random_algebra_element(m: &FModule, rng: &mut ChaCha12Rng) -> FMat {
    let field = &m.field;
    let mut acc = FMat::zero(m.dim, m.dim);
    let terms = 2 + (rng.next_u64() % 2) as usize;
    for _ in 0..terms {
        let len = 1 + (rng.next_u64() % 3) as usize;
        let mut w = FMat::identity(m.dim);
        for _ in 0..len {
            let pick = (rng.next_u64() % m.gens.len() as u64) as usize;
            w = w.mul(field, &m.gens[pick]);
        }
        let c = rng.next_u64() % field.order();
        // remap arbitrary residues into valid field codes
        let c = field.from_int(c as i64);
        if c != 0 {
            acc = acc.add(field, &w.scale(field, c));
        }
    }
    acc
}

/// One attempt to split the module, Norton's criterion for the
/// irreducibility conclusion.
fn try_split(m: &FModule, rng: &mut ChaCha12Rng) -> Option<Split> {
    let field = &m.field;
    let a = random_algebra_element(m, rng);
    if a == FMat::zero(m.dim, m.dim) {
        return None;
    }
    let cp = a.charpoly(field);
    let factors = poly::factor(field, &cp, rng);
    for (f, _) in &factors {
        let fa = a.eval_poly(field, f);
        let kernel = fa.left_nullspace(field);
        if kernel.is_empty() {
            continue;
        }
        let v = &kernel[0];
        let basis = spin(field, &m.gens, v);
        if basis.len() < m.dim {
            return Some(Split::Submodule(basis));
        }
        // the kernel vector spins to everything; Norton's test applies when
        // the nullity equals the factor degree
        if kernel.len() == f.len() - 1 {
            let fat = fa.transpose();
            let kernel_t = fat.left_nullspace(field);
            let w = &kernel_t[0];
            let tgens: Vec<FMat> = m.gens.iter().map(|g| g.transpose()).collect();
            let dual_basis = spin(field, &tgens, w);
            if dual_basis.len() == m.dim {
                return Some(Split::Irreducible);
            }
            // the annihilator of the dual submodule is a proper submodule
            let bmat = FMat::from_rows(dual_basis);
            let perp = bmat.transpose().left_nullspace(field);
            debug_assert!(!perp.is_empty() && perp.len() < m.dim);
            return Some(Split::Submodule(perp));
        }
    }
    None
}

/// Composition factors by repeated chopping; deterministic for a fixed seed
/// schedule, with internal retries on inconclusive random choices.
pub fn composition_factors(m: &FModule, schedule: u64) -> Result<Vec<FModule>> {
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    if m.dim == 1 {
        return Ok(alloc::vec![m.clone()]);
    }
    let split = {
        let mut found = None;
        for attempt in 0..64u64 {
            let mut rng = ChaCha12Rng::seed_from_u64(schedule.wrapping_mul(1009).wrapping_add(attempt));
            if let Some(s) = try_split(m, &mut rng) {
                found = Some(s);
                break;
            }
        }
        found.ok_or_else(|| Error::Internal(String::from("meataxe did not reach a decision")))?
    };
    match split {
        Split::Irreducible => Ok(alloc::vec![m.clone()]),
        Split::Submodule(basis) => {
            let field = &m.field;
            let bmat = FMat::from_rows(basis.clone());
            // restricted action
            let mut sub_gens = Vec::with_capacity(m.gens.len());
            for g in &m.gens {
                let image = bmat.mul(field, g);
                let rows: Vec<Vec<u64>> = (0..bmat.rows)
                    .map(|r| {
                        solve_in_rows(field, &bmat, image.row(r))
                            .expect("submodule basis is invariant")
                    })
                    .collect();
                sub_gens.push(FMat::from_rows(rows));
            }
            let sub = FModule::new(field.clone(), bmat.rows, sub_gens)?;
            // quotient action on the free coordinates
            let mut echelon = bmat.clone();
            let pivots = echelon.rref(field);
            let free: Vec<usize> = (0..m.dim).filter(|c| !pivots.contains(c)).collect();
            let mut quot_gens = Vec::with_capacity(m.gens.len());
            for g in &m.gens {
                let mut rows = Vec::with_capacity(free.len());
                for &fc in &free {
                    let mut v = alloc::vec![0u64; m.dim];
                    v[fc] = 1;
                    let mut w = {
                        let mut out = alloc::vec![0u64; m.dim];
                        for (i, &c) in v.iter().enumerate() {
                            if c == 0 {
                                continue;
                            }
                            for j in 0..m.dim {
                                let a = g[(i, j)];
                                if a != 0 {
                                    out[j] = field.add(out[j], field.mul(c, a));
                                }
                            }
                        }
                        out
                    };
                    // reduce modulo the submodule
                    for (r, &pc) in pivots.iter().enumerate() {
                        if w[pc] != 0 {
                            let c = w[pc];
                            for j in 0..m.dim {
                                let t = field.mul(c, echelon[(r, j)]);
                                w[j] = field.sub(w[j], t);
                            }
                        }
                    }
                    rows.push(free.iter().map(|&c| w[c]).collect());
                }
                quot_gens.push(FMat::from_rows(rows));
            }
            let quot = FModule::new(field.clone(), free.len(), quot_gens)?;
            let mut factors = composition_factors(&sub, schedule)?;
            factors.extend(composition_factors(&quot, schedule)?);
            Ok(factors)
        }
    }
}

fn solve_in_rows(field: &FiniteField, basis: &FMat, target: &[u64]) -> Option<Vec<u64>> {
    let d = basis.rows;
    let mut aug = FMat::zero(target.len(), d + 1);
    for i in 0..target.len() {
        for j in 0..d {
            aug[(i, j)] = basis[(j, i)];
        }
        aug[(i, d)] = target[i];
    }
    let pivots = aug.rref(field);
    let mut x = alloc::vec![0u64; d];
    for (r, &c) in pivots.iter().enumerate() {
        if c == d {
            return None;
        }
        x[c] = aug[(r, d)];
    }
    let back = FMat::from_rows(alloc::vec![x.clone()]).mul(field, basis);
    (back.row(0) == target).then_some(x)
}

/// Equivalence of two modules over the same field, with an intertwiner
/// witness T such that rho1(g) T = T rho2(g) for every generator.
pub fn is_equivalent(m1: &FModule, m2: &FModule) -> Result<Option<FMat>> {
    if m1.field != m2.field {
        return Err(Error::Invalid(String::from("modules live over different fields")));
    }
    if m1.gens.len() != m2.gens.len() {
        return Err(Error::Invalid(String::from("generator counts differ")));
    }
    if m1.dim != m2.dim {
        return Ok(None);
    }
    let field = &m1.field;
    let n = m1.dim;
    if n == 0 {
        return Ok(Some(FMat::identity(0)));
    }
    // unknowns: entries of T, row major
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (a, b) in m1.gens.iter().zip(&m2.gens) {
        // A T - T B = 0
        for r in 0..n {
            for c in 0..n {
                let mut row = alloc::vec![0u64; n * n];
                for k in 0..n {
                    // A[r][k] T[k][c]
                    row[k * n + c] = field.add(row[k * n + c], a[(r, k)]);
                    // - T[r][k] B[k][c]
                    row[r * n + k] = field.sub(row[r * n + k], b[(k, c)]);
                }
                rows.push(row);
            }
        }
    }
    let system = FMat::from_rows(rows);
    let solutions = system.nullspace(field);
    // search the solution space for an invertible element
    let q = field.order();
    let dim = solutions.len();
    if dim == 0 {
        return Ok(None);
    }
    let feasible = q.checked_pow(dim as u32).map_or(false, |t| t <= 1 << 16);
    let reshape = |flat: &[u64]| -> FMat {
        FMat::from_rows(flat.chunks(n).map(|ch| ch.to_vec()).collect())
    };
    if feasible {
        let mut combo = alloc::vec![0u64; dim];
        loop {
            // advance odometer
            let mut pos = 0;
            loop {
                if pos == dim {
                    return Ok(None);
                }
                combo[pos] += 1;
                if combo[pos] < q {
                    break;
                }
                combo[pos] = 0;
                pos += 1;
            }
            let mut flat = alloc::vec![0u64; n * n];
            for (ci, &coeff) in combo.iter().enumerate() {
                let coeff = field.from_int(coeff as i64);
                if coeff == 0 {
                    continue;
                }
                for (slot, &s) in flat.iter_mut().zip(&solutions[ci]) {
                    *slot = field.add(*slot, field.mul(coeff, s));
                }
            }
            let t = reshape(&flat);
            if t.inverse(field).is_some() {
                return Ok(Some(t));
            }
        }
    }
    for sol in &solutions {
        let t = reshape(sol);
        if t.inverse(field).is_some() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Trace of the matrix lifted to an exact cyclotomic value: the eigenvalue
/// multiplicities of an order-o matrix over GF(q) with o | q - 1 are
/// recovered by the discrete Fourier sum over the traces of its powers.
pub fn lift_matrix_trace(field: &FiniteField, a: &FMat, o: u64) -> Result<Cyclotomic> {
    if o == 0 || (field.order() - 1) % o != 0 {
        return Err(Error::Invalid(String::from(
            "element order does not divide q - 1",
        )));
    }
    let z = field.root_of_unity(o)?;
    let z_inv = field.inv(z);
    let inv_o = field.inv(field.from_int(o as i64));
    let traces: Vec<u64> = {
        let mut acc = FMat::identity(a.rows);
        let mut out = Vec::with_capacity(o as usize);
        for _ in 0..o {
            let tr = (0..acc.rows).fold(0u64, |t, i| field.add(t, acc[(i, i)]));
            out.push(tr);
            acc = acc.mul(field, a);
        }
        if !acc.is_identity() {
            return Err(Error::Invalid(String::from("matrix order does not divide o")));
        }
        out
    };
    let mut value = Cyclotomic::zero();
    let mut total = 0u64;
    for t in 0..o {
        let mut acc = 0u64;
        for (s, &tr) in traces.iter().enumerate() {
            let w = field.pow(z_inv, (s as u64 * t) % o);
            acc = field.add(acc, field.mul(tr, w));
        }
        let mult = field.mul(acc, inv_o);
        if mult as usize > a.rows {
            return Err(Error::Internal(String::from(
                "eigenvalue multiplicity exceeds the dimension",
            )));
        }
        total += mult;
        if mult > 0 {
            value = value.add(
                &Cyclotomic::root_of_unity(o as u32, t as i64)
                    .scale(&Rational::from_integer(num_bigint::BigInt::from(mult))),
            );
        }
    }
    if total as usize != a.rows {
        return Err(Error::Internal(String::from(
            "eigenvalue multiplicities do not sum to the dimension",
        )));
    }
    Ok(value)
}

/// Events recorded while walking the pc chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WalkEvent {
    LevelStart { level: usize, subgroup_order: u128 },
    Extended { level: usize, from_dim: usize, count: u64 },
    ExtensionFailed { level: usize, from_dim: usize },
    Induced { level: usize, from_dim: usize, to_dim: usize },
    Deduplicated { level: usize, kept: usize, discarded: usize },
    FieldExtended { from_q: u64, to_q: u64 },
}

/// A complete set of pairwise inequivalent absolutely irreducible modules,
/// together with the execution trace of the walk that produced them.
#[derive(Debug)]
pub struct RepSet {
    pub field: FiniteField,
    pub modules: Vec<FModule>,
    pub trace: Vec<WalkEvent>,
}

/// All absolutely irreducible representations of a consistent pc-group with
/// prime relative orders over GF(q), q = 1 (mod exp(G)): walk the subgroup
/// chain bottom-up, either extending each representation in p inequivalent
/// scaled ways or inducing it to degree m*p, deduplicating by character.
pub fn bruckner_irreducibles(group: &PcGroup, q: u64) -> Result<RepSet> {
    let pres = group.presentation();
    for &e in pres.orders() {
        if !crate::algebra::ff::is_prime_u64(e) {
            return Err(Error::Invalid(alloc::format!(
                "relative order {e} is not prime; refine the presentation first"
            )));
        }
    }
    let exponent = pres.exponent();
    let (p_char, k) = factor_prime_power(q)
        .ok_or_else(|| Error::Invalid(alloc::format!("{q} is not a prime power")))?;
    if exponent % p_char == 0 {
        return Err(Error::Invalid(String::from(
            "field characteristic divides the group order",
        )));
    }
    if (q - 1) % exponent != 0 {
        return Err(Error::Invalid(alloc::format!(
            "q = {q} does not satisfy q = 1 (mod exp(G) = {exponent})"
        )));
    }
    let mut field = FiniteField::new(p_char, k)?;
    let mut trace: Vec<WalkEvent> = Vec::new();
    loop {
        let mut attempt = Vec::new();
        match walk(group, &field, &mut attempt)? {
            Some(modules) => {
                trace.extend(attempt);
                return Ok(RepSet {
                    field,
                    modules,
                    trace,
                });
            }
            None => {
                // a needed p-th root was missing; enlarge the field and redo
                let bigger = FiniteField::new(p_char, field.degree() * 2)?;
                trace.push(WalkEvent::FieldExtended {
                    from_q: field.order(),
                    to_q: bigger.order(),
                });
                field = bigger;
            }
        }
    }
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    for p in 2..=q {
        if q % p == 0 {
            if !crate::algebra::ff::is_prime_u64(p) {
                return None;
            }
            let mut k = 0;
            let mut m = q;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return (m == 1).then_some((p, k));
        }
    }
    None
}

struct Rep {
    dim: usize,
    /// Matrices of the generators from the current level downwards.
    mats: Vec<FMat>,
}

/// One full walk over the chain; returns None if a p-th root was missing in
/// the field (the caller enlarges it and retries).
fn walk(group: &PcGroup, field: &FiniteField, trace: &mut Vec<WalkEvent>) -> Result<Option<Vec<FModule>>> {
    let pres = group.presentation();
    let n = pres.generator_count();
    let mut reps: Vec<Rep> = alloc::vec![Rep {
        dim: 1,
        mats: Vec::new(),
    }];

    for level in (0..n).rev() {
        let sub = pres.subpresentation(level);
        trace.push(WalkEvent::LevelStart {
            level,
            subgroup_order: sub.order(),
        });
        let p = pres.order_of(level);
        // conjugation words of the deeper generators, reindexed to the
        // subpresentation below this level
        let conj_words: Vec<Vec<(usize, u64)>> = (level + 1..n)
            .map(|j| {
                pres.conj_rhs(level, j)
                    .iter()
                    .map(|&(l, f)| (l - (level + 1), f))
                    .collect()
            })
            .collect();
        let power_word: Vec<(usize, u64)> = pres
            .power_rhs(level)
            .iter()
            .map(|&(l, f)| (l - (level + 1), f))
            .collect();
        let below = pres.subpresentation(level + 1);

        let mut next: Vec<Rep> = Vec::new();
        for rep in &reps {
            let module = FModule {
                field: field.clone(),
                dim: rep.dim,
                gens: rep.mats.clone(),
            };
            // phi(y^(g_level)) for each generator y below
            let conj_mats: Vec<FMat> = conj_words.iter().map(|w| module.eval_word(w)).collect();
            match intertwiner(field, &rep.mats, &conj_mats, rep.dim)? {
                Some(x0) => {
                    // rescale so that X^p equals phi of the power word
                    let target = module.eval_word(&power_word);
                    let xp = x0.pow(field, p);
                    let lambda_mat = xp.mul(field, &target.inverse(field).expect("rep matrix invertible"));
                    let lam = lambda_mat[(0, 0)];
                    if lambda_mat != FMat::scalar(rep.dim, lam) {
                        return Err(Error::Internal(String::from(
                            "X^p does not differ from the power image by a scalar",
                        )));
                    }
                    let needed = field.inv(lam);
                    let d = match field.nth_root(needed, p) {
                        Some(d) => d,
                        None => return Ok(None),
                    };
                    let zeta = field.root_of_unity(p)?;
                    let scaled = x0.scale(field, d);
                    for t in 0..p {
                        let factor = field.pow(zeta, t);
                        let mut mats = alloc::vec![scaled.scale(field, factor)];
                        mats.extend(rep.mats.iter().cloned());
                        next.push(Rep {
                            dim: rep.dim,
                            mats,
                        });
                    }
                    trace.push(WalkEvent::Extended {
                        level,
                        from_dim: rep.dim,
                        count: p,
                    });
                }
                None => {
                    trace.push(WalkEvent::ExtensionFailed {
                        level,
                        from_dim: rep.dim,
                    });
                    let induced = induce(field, pres, level, rep, &below)?;
                    trace.push(WalkEvent::Induced {
                        level,
                        from_dim: rep.dim,
                        to_dim: induced.dim,
                    });
                    next.push(induced);
                }
            }
        }
        // deduplicate conjugate representations by character comparison
        let elements = sub.elements();
        let mut kept: Vec<Rep> = Vec::new();
        let mut seen: alloc::collections::BTreeSet<Vec<u64>> = alloc::collections::BTreeSet::new();
        let mut discarded = 0usize;
        for rep in next {
            let module = FModule {
                field: field.clone(),
                dim: rep.dim,
                gens: rep.mats.clone(),
            };
            let character: Vec<u64> = elements
                .iter()
                .map(|e| {
                    let m = module.eval(e.exponents());
                    (0..m.rows).fold(0u64, |t, i| field.add(t, m[(i, i)]))
                })
                .collect();
            if seen.insert(character) {
                kept.push(rep);
            } else {
                discarded += 1;
            }
        }
        trace.push(WalkEvent::Deduplicated {
            level,
            kept: kept.len(),
            discarded,
        });
        // every representation must satisfy the subgroup relations
        for rep in &kept {
            verify_relations(field, &sub, &rep.mats)?;
        }
        let total: u128 = kept.iter().map(|r| (r.dim * r.dim) as u128).sum();
        if total != sub.order() {
            return Err(Error::Internal(alloc::format!(
                "squared dimensions sum to {total}, expected {}",
                sub.order()
            )));
        }
        reps = kept;
    }

    let modules = reps
        .into_iter()
        .map(|r| FModule::new(field.clone(), r.dim, r.mats))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(modules))
}

/// Solves phi(y) X = X phi(y^g) for all generators y of the lower level;
/// the solution space is at most one-dimensional for irreducible phi.
fn intertwiner(
    field: &FiniteField,
    gens: &[FMat],
    conj: &[FMat],
    dim: usize,
) -> Result<Option<FMat>> {
    if gens.is_empty() {
        // the trivial subgroup: X is unconstrained, pick the identity
        return Ok(Some(FMat::identity(dim)));
    }
    let n = dim;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (a, b) in gens.iter().zip(conj) {
        for r in 0..n {
            for c in 0..n {
                let mut row = alloc::vec![0u64; n * n];
                for k in 0..n {
                    row[k * n + c] = field.add(row[k * n + c], a[(r, k)]);
                    row[r * n + k] = field.sub(row[r * n + k], b[(k, c)]);
                }
                rows.push(row);
            }
        }
    }
    let system = FMat::from_rows(rows);
    let solutions = system.nullspace(field);
    if solutions.is_empty() {
        return Ok(None);
    }
    if solutions.len() > 1 {
        return Err(Error::Internal(String::from(
            "intertwiner space has dimension above one; representation not irreducible",
        )));
    }
    let x = FMat::from_rows(solutions[0].chunks(n).map(|c| c.to_vec()).collect());
    if x.inverse(field).is_none() {
        return Err(Error::Internal(String::from(
            "nonzero intertwiner between irreducibles must be invertible",
        )));
    }
    Ok(Some(x))
}

/// Induced representation of degree dim * p along the transversal
/// 1, g, ..., g^(p-1) of the level generator g.
fn induce(
    field: &FiniteField,
    pres: &PcPresentation,
    level: usize,
    rep: &Rep,
    below: &PcPresentation,
) -> Result<Rep> {
    let n = pres.generator_count();
    let p = pres.order_of(level) as usize;
    let m = rep.dim;
    let module = FModule {
        field: field.clone(),
        dim: m,
        gens: rep.mats.clone(),
    };

    // sigma: y -> y^(g_level) as an automorphism of the subgroup below
    let sigma_images: Vec<PcElem> = (level + 1..n)
        .map(|j| {
            let w: Vec<(usize, u64)> = pres
                .conj_rhs(level, j)
                .iter()
                .map(|&(l, f)| (l - (level + 1), f))
                .collect();
            below.collect_letters(&w.iter().map(|&(l, f)| (l, f as i64)).collect::<Vec<_>>())
        })
        .collect();
    let apply_sigma = |x: &PcElem| -> PcElem { below.eval_with(&sigma_images, &syllables(x)) };
    // order of sigma, to realize sigma^(-t) as a positive power
    let mut order = 1u64;
    {
        let mut current: Vec<PcElem> = sigma_images.clone();
        loop {
            let is_id = current
                .iter()
                .enumerate()
                .all(|(j, x)| *x == below.generator(j));
            if is_id {
                break;
            }
            current = current.iter().map(&apply_sigma).collect();
            order += 1;
            if order > 1_000_000 {
                return Err(Error::Internal(String::from("automorphism order runaway")));
            }
        }
    }
    let sigma_pow = |x: &PcElem, t: u64| -> PcElem {
        let mut acc = x.clone();
        for _ in 0..t {
            acc = apply_sigma(&acc);
        }
        acc
    };

    let dim = m * p;
    let mut gens: Vec<FMat> = Vec::with_capacity(n - level);
    // the level generator permutes the blocks, closing with phi(power word)
    let power_word: Vec<(usize, u64)> = pres
        .power_rhs(level)
        .iter()
        .map(|&(l, f)| (l - (level + 1), f))
        .collect();
    let closing = module.eval_word(&power_word);
    let mut top = FMat::zero(dim, dim);
    for t in 0..p {
        if t + 1 < p {
            for r in 0..m {
                top[(t * m + r, (t + 1) * m + r)] = 1;
            }
        } else {
            for r in 0..m {
                for c in 0..m {
                    top[(t * m + r, c)] = closing[(r, c)];
                }
            }
        }
    }
    gens.push(top);
    // deeper generators act blockwise through sigma^(-t) = sigma^(order - t)
    for j in level + 1..n {
        let mut mat = FMat::zero(dim, dim);
        let gj = below.generator(j - (level + 1));
        for t in 0..p {
            let back = (order - (t as u64 % order)) % order;
            let conj_elem = sigma_pow(&gj, back);
            let block = module.eval(conj_elem.exponents());
            for r in 0..m {
                for c in 0..m {
                    mat[(t * m + r, t * m + c)] = block[(r, c)];
                }
            }
        }
        gens.push(mat);
    }
    Ok(Rep { dim, mats: gens })
}

fn syllables(x: &PcElem) -> Vec<(usize, u64)> {
    x.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &f)| f != 0)
        .map(|(i, &f)| (i, f))
        .collect()
}

/// Evaluates all defining relations of the presentation on the matrices.
fn verify_relations(field: &FiniteField, pres: &PcPresentation, mats: &[FMat]) -> Result<()> {
    let n = pres.generator_count();
    let dim = mats.first().map(|m| m.rows).unwrap_or(0);
    let module = FModule {
        field: field.clone(),
        dim,
        gens: mats.to_vec(),
    };
    for i in 0..n {
        let lhs = mats[i].pow(field, pres.order_of(i));
        let rhs = module.eval_word(pres.power_rhs(i));
        if lhs != rhs {
            return Err(Error::Internal(alloc::format!(
                "representation violates the power relation of generator {i}"
            )));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = mats[j].mul(field, &mats[i]);
            let rhs = mats[i].mul(field, &module.eval_word(&pres.conj_rhs(i, j)));
            if lhs != rhs {
                return Err(Error::Internal(alloc::format!(
                    "representation of dim {dim} over {} generators violates the conjugate relation ({i}, {j})",
                    pres.generator_count()
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcgrp::{a4_pc, cyclic_pc, dihedral_pc, q8_pc, s4_pc};
    use crate::perm::symmetric_group;

    fn gf(q: u64) -> FiniteField {
        let (p, k) = factor_prime_power(q).unwrap();
        FiniteField::new(p, k).unwrap()
    }

    #[test]
    fn spin_examples() {
        let f = gf(7);
        let s3 = symmetric_group(3);
        let m = permutation_module(f.clone(), s3.generators()).unwrap();
        // the all-ones vector spans the fixed line
        let basis = spin(&f, &m.gens, &[1, 1, 1]);
        assert_eq!(basis.len(), 1);
        // a sum-zero vector spins to the 2-dimensional complement
        let basis = spin(&f, &m.gens, &[1, 6, 0]);
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn chop_permutation_module() {
        let f = gf(7);
        let s3 = symmetric_group(3);
        let m = permutation_module(f, s3.generators()).unwrap();
        let factors = composition_factors(&m, 0).unwrap();
        let mut dims: Vec<usize> = factors.iter().map(|x| x.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, alloc::vec![1, 2]);
    }

    #[test]
    fn chop_regular_module_of_s3() {
        let f = gf(7);
        let s3 = symmetric_group(3);
        let m = regular_module(f, &s3, 100).unwrap();
        for schedule in 0..5 {
            let factors = composition_factors(&m, schedule).unwrap();
            let mut dims: Vec<usize> = factors.iter().map(|x| x.dim).collect();
            dims.sort_unstable();
            assert_eq!(dims, alloc::vec![1, 1, 2, 2], "schedule {schedule}");
        }
    }

    #[test]
    fn chop_trivial_module() {
        let f = gf(7);
        let m = FModule::new(f, 1, alloc::vec![FMat::identity(1)]).unwrap();
        let factors = composition_factors(&m, 0).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].dim, 1);
    }

    #[test]
    fn c3_representations_over_gf7() {
        let c3 = cyclic_pc(3).unwrap();
        let reps = bruckner_irreducibles(&c3, 7).unwrap();
        assert_eq!(reps.modules.len(), 3);
        let mut values: Vec<u64> = reps
            .modules
            .iter()
            .map(|m| m.gens[0][(0, 0)])
            .collect();
        values.sort_unstable();
        assert_eq!(values, alloc::vec![1, 2, 4]);
    }

    #[test]
    fn trivial_group_representations() {
        let t = cyclic_pc(1).unwrap();
        let reps = bruckner_irreducibles(&t, 7).unwrap();
        assert_eq!(reps.modules.len(), 1);
        assert_eq!(reps.modules[0].dim, 1);
        assert!(reps.modules[0].gens.is_empty());
    }

    #[test]
    fn s4_over_gf13() {
        let s4 = s4_pc();
        let reps = bruckner_irreducibles(&s4, 13).unwrap();
        let mut dims: Vec<usize> = reps.modules.iter().map(|m| m.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, alloc::vec![1, 1, 2, 3, 3]);
        let total: usize = reps.modules.iter().map(|m| m.dim * m.dim).sum();
        assert_eq!(total, 24);
        // pairwise inequivalent
        for (i, a) in reps.modules.iter().enumerate() {
            for b in reps.modules.iter().skip(i + 1) {
                assert!(is_equivalent(a, b).unwrap().is_none());
            }
            assert!(is_equivalent(a, a).unwrap().is_some());
        }
        // the walkthrough path: a failed extension followed by induction to 2
        let failed_then_induced = reps.trace.windows(2).any(|w| {
            matches!(
                (&w[0], &w[1]),
                (
                    WalkEvent::ExtensionFailed { level: 0, from_dim: 1 },
                    WalkEvent::Induced { level: 0, from_dim: 1, to_dim: 2 }
                )
            )
        });
        assert!(failed_then_induced, "trace: {:?}", reps.trace);
    }

    #[test]
    fn other_groups_satisfy_sum_of_squares() {
        for (group, q, expected) in [
            (dihedral_pc(10).unwrap(), 11, alloc::vec![1, 1, 2, 2]),
            (a4_pc(), 7, alloc::vec![1, 1, 1, 3]),
            (q8_pc(), 5, alloc::vec![1, 1, 1, 1, 2]),
            (cyclic_pc(2).unwrap(), 7, alloc::vec![1, 1]),
        ] {
            let reps = bruckner_irreducibles(&group, q).unwrap();
            let mut dims: Vec<usize> = reps.modules.iter().map(|m| m.dim).collect();
            dims.sort_unstable();
            assert_eq!(dims, expected);
            for (i, a) in reps.modules.iter().enumerate() {
                for b in reps.modules.iter().skip(i + 1) {
                    assert!(is_equivalent(a, b).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn equivalence_with_witness() {
        let s4 = s4_pc();
        let reps = bruckner_irreducibles(&s4, 13).unwrap();
        let two = reps.modules.iter().find(|m| m.dim == 2).unwrap();
        // conjugate by an invertible matrix and recover equivalence
        let f = &two.field;
        let t = FMat::from_rows(alloc::vec![alloc::vec![1, 2], alloc::vec![3, 1]]);
        let tinv = t.inverse(f).unwrap();
        let conj_gens: Vec<FMat> = two
            .gens
            .iter()
            .map(|g| tinv.mul(f, g).mul(f, &t))
            .collect();
        let other = FModule::new(f.clone(), 2, conj_gens).unwrap();
        let witness = is_equivalent(two, &other).unwrap().unwrap();
        for (a, b) in two.gens.iter().zip(&other.gens) {
            assert_eq!(a.mul(f, &witness), witness.mul(f, b));
        }
        // distinct one-dimensional representations are inequivalent
        let c3 = cyclic_pc(3).unwrap();
        let reps = bruckner_irreducibles(&c3, 7).unwrap();
        assert!(is_equivalent(&reps.modules[0], &reps.modules[1])
            .unwrap()
            .is_none());
    }

    #[test]
    fn rejected_parameters() {
        let s4 = s4_pc();
        // 7 != 1 mod 12
        assert!(bruckner_irreducibles(&s4, 7).is_err());
        // characteristic dividing the order
        assert!(bruckner_irreducibles(&s4, 3).is_err());
        // non-prime relative orders
        let c6 = crate::pcgrp::PcPresentation::new(
            alloc::vec![alloc::string::String::from("a")],
            alloc::vec![6],
            alloc::vec![Vec::new()],
            Vec::new(),
        )
        .unwrap();
        let c6 = crate::pcgrp::PcGroup::new(c6).unwrap();
        assert!(bruckner_irreducibles(&c6, 7).is_err());
    }

    #[test]
    fn lifted_traces_are_exact() {
        let f = gf(13);
        // an order-3 diagonal matrix with eigenvalues 1, zeta3
        let z3 = f.root_of_unity(3).unwrap();
        let a = FMat::from_rows(alloc::vec![alloc::vec![1, 0], alloc::vec![0, z3]]);
        let v = lift_matrix_trace(&f, &a, 3).unwrap();
        let expected = Cyclotomic::one().add(&Cyclotomic::root_of_unity(3, 1));
        assert_eq!(v, expected);
    }

    #[test]
    fn s4_characters_match_ordinary_table() {
        // lift the GF(13) characters and compare with the ordinary table of
        // the regular permutation image, row by row
        let s4 = s4_pc();
        let reps = bruckner_irreducibles(&s4, 13).unwrap();
        let f = &reps.field;
        let pres = s4.presentation();
        let perm = pres.regular_perm_group().unwrap();
        let table = crate::chartab::character_table(&perm, 2000).unwrap();
        let classes = perm.conjugacy_classes(2000).unwrap();
        // map each class representative back to an exponent vector
        let elements = pres.elements();
        let perm_of = |e: &PcElem| {
            let mut acc = crate::perm::Permutation::identity(perm.degree());
            for (i, &fe) in e.exponents().iter().enumerate() {
                let gi_perm = perm.generators()[i].pow(fe as i64);
                acc = acc.mul(&gi_perm);
            }
            acc
        };
        for module in &reps.modules {
            let mut lifted = alloc::vec![Cyclotomic::zero(); table.class_count()];
            let mut seen = alloc::vec![false; table.class_count()];
            for e in &elements {
                let cls = classes.class_of(&perm_of(e)).unwrap();
                if seen[cls] {
                    continue;
                }
                seen[cls] = true;
                let mat = module.eval(e.exponents());
                let o = pres.element_order(e);
                lifted[cls] = lift_matrix_trace(f, &mat, o).unwrap();
            }
            assert!(
                table.irreducibles.iter().any(|row| *row == lifted),
                "lifted character not found in the ordinary table"
            );
        }
    }
}
