//! Polycyclic presentations: collection to normal form, consistency
//! checking, constructors, and conversion from solvable permutation groups.
//!
//! Generators are indexed 0..n with the subgroup chain U_i = <g_i, ..., g_n>;
//! each relative order e_i is at least 2, the power relation sends g_i^(e_i)
//! to a normal word in generators above i, and the conjugate relation for
//! i < j sends g_j^(g_i) to a normal word in generators above i. Normal forms
//! are exponent vectors with 0 <= f_i < e_i.

mod collect;

pub(crate) use collect::{collect, CollectHooks, NoHooks};
pub use collect::RelId;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fpgrp::{FpPresentation, Word};
use crate::perm::{PermGroup, Permutation};

/// Exponent vector normal form, one entry per pc generator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PcElem(pub Vec<u64>);

impl From<Vec<u64>> for PcElem {
    fn from(v: Vec<u64>) -> PcElem {
        PcElem(v)
    }
}

impl PcElem {
    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn syllables(&self) -> Vec<(usize, i64)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e as i64))
            .collect()
    }
}

type NormalWord = Vec<(usize, u64)>;

#[derive(Clone, Debug)]
pub struct PcPresentation {
    names: Vec<String>,
    orders: Vec<u64>,
    powers: Vec<NormalWord>,
    conjugates: BTreeMap<(usize, usize), NormalWord>,
}

impl PcPresentation {
    pub fn new(
        names: Vec<String>,
        orders: Vec<u64>,
        powers: Vec<NormalWord>,
        conjugates: Vec<((usize, usize), NormalWord)>,
    ) -> Result<PcPresentation> {
        let n = orders.len();
        if names.len() != n {
            return Err(Error::Invalid(String::from("one name per generator required")));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name == "id" || names[..i].contains(name) {
                return Err(Error::Invalid(alloc::format!("bad generator name `{name}`")));
            }
        }
        if orders.iter().any(|&e| e < 2) {
            return Err(Error::Invalid(String::from("relative orders must be >= 2")));
        }
        if powers.len() != n {
            return Err(Error::Invalid(String::from("one power word per generator required")));
        }
        // a right-hand side must be a normal word in generators above `floor`
        let check_word = |w: &NormalWord, floor: usize| -> Result<()> {
            let mut prev: Option<usize> = None;
            for &(j, f) in w {
                if j >= n || j <= floor {
                    return Err(Error::Invalid(String::from(
                        "right-hand side uses a generator outside its permitted range",
                    )));
                }
                if prev.map_or(false, |p| j <= p) {
                    return Err(Error::Invalid(String::from("normal word not ascending")));
                }
                if f == 0 || f >= orders[j] {
                    return Err(Error::Invalid(String::from("normal word exponent out of range")));
                }
                prev = Some(j);
            }
            Ok(())
        };
        for (i, w) in powers.iter().enumerate() {
            check_word(w, i)?;
        }
        let mut conj_map = BTreeMap::new();
        for ((i, j), w) in conjugates {
            if i >= j || j >= n {
                return Err(Error::Invalid(String::from("conjugate pair must satisfy i < j < n")));
            }
            check_word(&w, i)?;
            conj_map.insert((i, j), w);
        }
        Ok(PcPresentation {
            names,
            orders,
            powers,
            conjugates: conj_map,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.orders.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order_of(&self, i: usize) -> u64 {
        self.orders[i]
    }

    pub fn power_rhs(&self, i: usize) -> &[(usize, u64)] {
        &self.powers[i]
    }

    /// Right-hand side of g_j^(g_i); defaults to g_j itself.
    pub fn conj_rhs(&self, i: usize, j: usize) -> alloc::borrow::Cow<'_, [(usize, u64)]> {
        match self.conjugates.get(&(i, j)) {
            Some(w) => alloc::borrow::Cow::Borrowed(w.as_slice()),
            None => alloc::borrow::Cow::Owned(alloc::vec![(j, 1)]),
        }
    }

    pub fn order(&self) -> u128 {
        self.orders.iter().map(|&e| e as u128).product()
    }

    pub fn identity(&self) -> PcElem {
        PcElem(alloc::vec![0; self.generator_count()])
    }

    pub fn generator(&self, i: usize) -> PcElem {
        let mut e = self.identity();
        e.0[i] = 1;
        e
    }

    /// Normal form of an arbitrary word, by collection from the left.
    pub fn collect_letters(&self, letters: &[(usize, i64)]) -> PcElem {
        collect(self, letters, &mut NoHooks)
    }

    pub(crate) fn collect_with_hooks<H: CollectHooks>(
        &self,
        letters: &[(usize, i64)],
        hooks: &mut H,
    ) -> PcElem {
        collect(self, letters, hooks)
    }

    pub fn mul(&self, a: &PcElem, b: &PcElem) -> PcElem {
        let mut letters = a.syllables();
        letters.extend(b.syllables());
        self.collect_letters(&letters)
    }

    pub fn inv(&self, a: &PcElem) -> PcElem {
        let letters: Vec<(usize, i64)> = a
            .syllables()
            .into_iter()
            .rev()
            .map(|(i, e)| (i, -e))
            .collect();
        self.collect_letters(&letters)
    }

    pub fn pow(&self, a: &PcElem, e: i64) -> PcElem {
        let base = if e < 0 { self.inv(a) } else { a.clone() };
        let mut acc = self.identity();
        let mut k = e.unsigned_abs();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    pub fn conjugate(&self, a: &PcElem, by: &PcElem) -> PcElem {
        self.mul(&self.inv(by), &self.mul(a, by))
    }

    pub fn element_order(&self, a: &PcElem) -> u64 {
        let mut acc = a.clone();
        let mut o = 1u64;
        while !acc.is_identity() {
            acc = self.mul(&acc, a);
            o += 1;
        }
        o
    }

    /// All elements in mixed-radix order (first generator most significant).
    pub fn elements(&self) -> Vec<PcElem> {
        let n = self.generator_count();
        let total = self.order();
        assert!(total <= 1 << 24, "element enumeration too large");
        let mut out = Vec::with_capacity(total as usize);
        let mut cur = alloc::vec![0u64; n];
        loop {
            out.push(PcElem(cur.clone()));
            let mut pos = n;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                cur[pos] += 1;
                if cur[pos] < self.orders[pos] {
                    break;
                }
                cur[pos] = 0;
            }
        }
    }

    /// Mixed-radix rank of a normal form, consistent with `elements` order.
    pub fn rank(&self, a: &PcElem) -> usize {
        let mut r = 0usize;
        for (i, &f) in a.0.iter().enumerate() {
            r = r * self.orders[i] as usize + f as usize;
        }
        r
    }

    pub fn exponent(&self) -> u64 {
        let mut e = 1u64;
        for x in self.elements() {
            e = num_integer::lcm(e, self.element_order(&x));
        }
        e
    }

    /// The regular permutation representation on the ranked element list.
    pub fn regular_perm_group(&self) -> Result<PermGroup> {
        let order = self.order();
        if order > u32::MAX as u128 / 2 {
            return Err(Error::CapExceeded {
                what: "regular representation degree",
                cap: u32::MAX as u64 / 2,
            });
        }
        let elements = self.elements();
        let mut gens = Vec::with_capacity(self.generator_count());
        for i in 0..self.generator_count() {
            let gi = self.generator(i);
            let images: Vec<u32> = elements
                .iter()
                .map(|x| self.rank(&self.mul(x, &gi)) as u32 + 1)
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
        PermGroup::new(order as u32, gens)
    }

    /// Consistency: all rewriting overlaps collect to equal normal forms.
    pub fn is_consistent(&self) -> bool {
        let n = self.generator_count();
        let word_of = |w: &[(usize, u64)]| -> Vec<(usize, i64)> {
            w.iter().map(|&(j, f)| (j, f as i64)).collect()
        };
        // g_k (g_j g_i) = (g_k g_j) g_i for k > j > i
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut lhs = alloc::vec![(k, 1i64), (i, 1)];
                    lhs.extend(word_of(&self.conj_rhs(i, j)));
                    let mut rhs = alloc::vec![(j, 1i64)];
                    rhs.extend(word_of(&self.conj_rhs(j, k)));
                    rhs.push((i, 1));
                    if self.collect_letters(&lhs) != self.collect_letters(&rhs) {
                        return false;
                    }
                }
            }
        }
        // g_j^(e_j) g_i = g_j^(e_j - 1) (g_j g_i) for j > i
        for i in 0..n {
            for j in i + 1..n {
                let mut lhs = word_of(&self.powers[j]);
                lhs.push((i, 1));
                let mut rhs = alloc::vec![(j, self.orders[j] as i64 - 1), (i, 1)];
                rhs.extend(word_of(&self.conj_rhs(i, j)));
                if self.collect_letters(&lhs) != self.collect_letters(&rhs) {
                    return false;
                }
            }
        }
        // g_j g_i^(e_i) = (g_j g_i) g_i^(e_i - 1) for j > i
        for i in 0..n {
            for j in i + 1..n {
                let mut lhs = alloc::vec![(j, 1i64)];
                lhs.extend(word_of(&self.powers[i]));
                let mut rhs = alloc::vec![(i, 1i64)];
                rhs.extend(word_of(&self.conj_rhs(i, j)));
                rhs.push((i, self.orders[i] as i64 - 1));
                if self.collect_letters(&lhs) != self.collect_letters(&rhs) {
                    return false;
                }
            }
        }
        // g_i^(e_i) g_i = g_i g_i^(e_i)
        for i in 0..n {
            let mut lhs = word_of(&self.powers[i]);
            lhs.push((i, 1));
            let mut rhs = alloc::vec![(i, 1i64)];
            rhs.extend(word_of(&self.powers[i]));
            if self.collect_letters(&lhs) != self.collect_letters(&rhs) {
                return false;
            }
        }
        true
    }

    /// Relators of the equivalent fp-presentation.
    pub fn to_fp_relators(&self) -> Vec<Word> {
        let n = self.generator_count();
        let mut out = Vec::new();
        let word_of = |w: &[(usize, u64)]| -> Word {
            Word::from_letters(w.iter().map(|&(j, f)| (j, f as i32)).collect())
        };
        for i in 0..n {
            let rel = Word::generator(i, self.orders[i] as i32)
                .concat(&word_of(&self.powers[i]).inverse());
            out.push(rel);
        }
        for i in 0..n {
            for j in i + 1..n {
                let gi = Word::generator(i, 1);
                let gj = Word::generator(j, 1);
                let rel = gi
                    .inverse()
                    .concat(&gj)
                    .concat(&gi)
                    .concat(&word_of(&self.conj_rhs(i, j)).inverse());
                out.push(rel);
            }
        }
        out
    }

    pub fn to_fp(&self) -> FpPresentation {
        FpPresentation::from_words(self.names.clone(), self.to_fp_relators())
            .expect("pc relators are well-formed")
    }

    /// The normal form as a word over the pc generators.
    pub fn elem_to_word(&self, a: &PcElem) -> Word {
        Word::from_letters(a.syllables().into_iter().map(|(i, e)| (i, e as i32)).collect())
    }

    /// Evaluates a normal word under substitution of elements.
    pub fn eval_with(&self, images: &[PcElem], w: &[(usize, u64)]) -> PcElem {
        let mut acc = self.identity();
        for &(j, f) in w {
            acc = self.mul(&acc, &self.pow(&images[j], f as i64));
        }
        acc
    }

    /// Checks that mapping g_i to images[i] defines an automorphism: the
    /// defining relations are respected and the images generate the group.
    pub fn verify_automorphism(&self, images: &[PcElem]) -> Result<()> {
        let n = self.generator_count();
        if images.len() != n {
            return Err(Error::Invalid(String::from("one image per generator required")));
        }
        for i in 0..n {
            let lhs = self.pow(&images[i], self.orders[i] as i64);
            let rhs = self.eval_with(images, &self.powers[i]);
            if lhs != rhs {
                return Err(Error::Invalid(alloc::format!(
                    "images violate the power relation of generator {}",
                    self.names[i]
                )));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.conjugate(&images[j], &images[i]);
                let rhs = self.eval_with(images, &self.conj_rhs(i, j));
                if lhs != rhs {
                    return Err(Error::Invalid(alloc::format!(
                        "images violate the conjugate relation of ({}, {})",
                        self.names[i], self.names[j]
                    )));
                }
            }
        }
        // bijectivity: the images generate the whole group
        let mut seen: alloc::collections::BTreeSet<PcElem> = alloc::collections::BTreeSet::new();
        let mut queue = alloc::vec![self.identity()];
        seen.insert(self.identity());
        while let Some(x) = queue.pop() {
            for img in images {
                let y = self.mul(&x, img);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        if seen.len() as u128 != self.order() {
            return Err(Error::Invalid(String::from("images do not generate the group")));
        }
        Ok(())
    }

    /// The presentation on generators start..n, reindexed from zero.
    pub fn subpresentation(&self, start: usize) -> PcPresentation {
        let shift = |w: &[(usize, u64)]| -> NormalWord {
            w.iter().map(|&(j, f)| (j - start, f)).collect()
        };
        let names = self.names[start..].to_vec();
        let orders = self.orders[start..].to_vec();
        let powers = self.powers[start..].iter().map(|w| shift(w)).collect();
        let conjugates = self
            .conjugates
            .iter()
            .filter(|(&(i, _), _)| i >= start)
            .map(|(&(i, j), w)| ((i - start, j - start), shift(w)))
            .collect();
        PcPresentation::new(names, orders, powers, conjugates)
            .expect("subpresentation of a valid presentation is valid")
    }
}

/// A consistent pc-group: a presentation whose collection gives unique
/// normal forms, so the order is the product of the relative orders.
#[derive(Clone, Debug)]
pub struct PcGroup {
    pres: PcPresentation,
}

impl PcGroup {
    pub fn new(pres: PcPresentation) -> Result<PcGroup> {
        if !pres.is_consistent() {
            return Err(Error::Inconsistent);
        }
        Ok(PcGroup { pres })
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn order(&self) -> u128 {
        self.pres.order()
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                alloc::format!("g{}", i + 1)
            }
        })
        .collect()
}

fn prime_factorization(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Cyclic group of order n as a pc-group with prime relative orders.
pub fn cyclic_pc(n: u64) -> Result<PcGroup> {
    if n == 0 {
        return Err(Error::Invalid(String::from("cyclic group order must be positive")));
    }
    let primes = prime_factorization(n);
    let k = primes.len();
    let mut powers: Vec<NormalWord> = Vec::with_capacity(k);
    for i in 0..k {
        if i + 1 < k {
            powers.push(alloc::vec![(i + 1, 1)]);
        } else {
            powers.push(Vec::new());
        }
    }
    let pres = PcPresentation::new(default_names(k), primes, powers, Vec::new())?;
    PcGroup::new(pres)
}

/// Direct product of cyclic groups with the given invariants.
pub fn abelian_pc(invariants: &[u64]) -> Result<PcGroup> {
    let mut orders = Vec::new();
    for &d in invariants {
        if d < 2 {
            return Err(Error::Invalid(String::from("abelian invariants must be >= 2")));
        }
        orders.push(d);
    }
    let n = orders.len();
    let powers = alloc::vec![Vec::new(); n];
    let pres = PcPresentation::new(default_names(n), orders, powers, Vec::new())?;
    PcGroup::new(pres)
}

/// Dihedral group of order m (m even, m >= 4): a reflection of order 2 on
/// top of a rotation of order m/2 that it inverts.
pub fn dihedral_pc(m: u64) -> Result<PcGroup> {
    if m < 4 || m % 2 != 0 {
        return Err(Error::Invalid(alloc::format!(
            "dihedral order must be an even number >= 4, got {m}"
        )));
    }
    let half = m / 2;
    let orders = alloc::vec![2, half];
    let powers = alloc::vec![Vec::new(), Vec::new()];
    let conj = if half > 2 {
        alloc::vec![((0, 1), alloc::vec![(1, half - 1)])]
    } else {
        Vec::new()
    };
    let pres = PcPresentation::new(default_names(2), orders, powers, conj)?;
    PcGroup::new(pres)
}

/// The symmetric group S4 with orders (2,3,2,2): b^a = b^2, c^a = d,
/// d^a = c, c^b = d, d^b = cd.
pub fn s4_pc() -> PcGroup {
    let pres = PcPresentation::new(
        default_names(4),
        alloc::vec![2, 3, 2, 2],
        alloc::vec![Vec::new(), Vec::new(), Vec::new(), Vec::new()],
        alloc::vec![
            ((0, 1), alloc::vec![(1, 2)]),
            ((0, 2), alloc::vec![(3, 1)]),
            ((0, 3), alloc::vec![(2, 1)]),
            ((1, 2), alloc::vec![(3, 1)]),
            ((1, 3), alloc::vec![(2, 1), (3, 1)]),
        ],
    )
    .unwrap();
    PcGroup::new(pres).expect("the S4 presentation is consistent")
}

/// The alternating group A4 with orders (3,2,2): b^a = c, c^a = bc.
pub fn a4_pc() -> PcGroup {
    let pres = PcPresentation::new(
        default_names(3),
        alloc::vec![3, 2, 2],
        alloc::vec![Vec::new(), Vec::new(), Vec::new()],
        alloc::vec![
            ((0, 1), alloc::vec![(2, 1)]),
            ((0, 2), alloc::vec![(1, 1), (2, 1)]),
        ],
    )
    .unwrap();
    PcGroup::new(pres).expect("the A4 presentation is consistent")
}

/// The quaternion group Q8 with orders (2,2,2): a^2 = b^2 = c, b^a = bc.
pub fn q8_pc() -> PcGroup {
    let pres = PcPresentation::new(
        default_names(3),
        alloc::vec![2, 2, 2],
        alloc::vec![alloc::vec![(2, 1)], alloc::vec![(2, 1)], Vec::new()],
        alloc::vec![((0, 1), alloc::vec![(1, 1), (2, 1)])],
    )
    .unwrap();
    PcGroup::new(pres).expect("the Q8 presentation is consistent")
}

/// An isomorphism between a solvable permutation group and a pc-group,
/// convertible in both directions.
pub struct PcIsomorphism {
    pc: PcGroup,
    perm: PermGroup,
    gen_perms: Vec<Permutation>,
    /// chain[i] = <g_i, ..., g_n> as a permutation group; chain[n] trivial.
    chain: Vec<PermGroup>,
}

impl PcIsomorphism {
    pub fn pc_group(&self) -> &PcGroup {
        &self.pc
    }

    pub fn perm_group(&self) -> &PermGroup {
        &self.perm
    }

    pub fn generator_perms(&self) -> &[Permutation] {
        &self.gen_perms
    }

    pub fn to_perm(&self, a: &PcElem) -> Permutation {
        let mut acc = Permutation::identity(self.perm.degree());
        for (i, &f) in a.exponents().iter().enumerate() {
            acc = acc.mul(&self.gen_perms[i].pow(f as i64));
        }
        acc
    }

    pub fn to_pc(&self, p: &Permutation) -> Result<PcElem> {
        if !self.perm.contains(p)? {
            return Err(Error::NotInGroup);
        }
        let n = self.gen_perms.len();
        let mut exponents = alloc::vec![0u64; n];
        let mut rest = p.clone();
        for i in 0..n {
            let e = self.pc.presentation().order_of(i);
            let mut found = false;
            for f in 0..e {
                let candidate = self.gen_perms[i].pow(-(f as i64)).mul(&rest);
                if self.chain[i + 1].contains(&candidate)? {
                    exponents[i] = f;
                    rest = candidate;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::Internal(String::from(
                    "element does not decompose along the pc chain",
                )));
            }
        }
        if !rest.is_identity() {
            return Err(Error::Internal(String::from("nonzero residue after pc decomposition")));
        }
        Ok(PcElem(exponents))
    }
}

/// Converts a solvable permutation group to a consistent pc-group by
/// refining the derived series into prime-index steps.
pub fn pc_from_solvable(g: &PermGroup, cap: u64) -> Result<PcIsomorphism> {
    let series = g.derived_series();
    if !series.last().map(|t| t.is_trivial()).unwrap_or(false) {
        return Err(Error::NotSolvable);
    }
    if g.order() > cap as u128 {
        return Err(Error::CapExceeded {
            what: "pc conversion",
            cap,
        });
    }
    let degree = g.degree();

    // build generators bottom-up: from the last nontrivial term upwards
    let mut gens_bottom_up: Vec<Permutation> = Vec::new();
    let mut orders_bottom_up: Vec<u64> = Vec::new();
    let mut chain_bottom_up: Vec<PermGroup> = alloc::vec![PermGroup::trivial(degree)];

    for layer in (0..series.len() - 1).rev() {
        let top = &series[layer];
        loop {
            let current = chain_bottom_up.last().unwrap();
            if current.order() == top.order() {
                break;
            }
            // first element of the layer group outside the current subgroup
            let x = top
                .elements(cap)?
                .iter()
                .find(|e| !current.contains(e).unwrap())
                .cloned()
                .ok_or_else(|| Error::Internal(String::from("no element extends the chain")))?;
            // order of x modulo the current subgroup
            let mut o = 1u64;
            let mut acc = x.clone();
            while !current.contains(&acc)? {
                acc = acc.mul(&x);
                o += 1;
            }
            let p = prime_factorization(o)[0];
            let y = x.pow((o / p) as i64);
            let mut new_gens = current.generators().to_vec();
            new_gens.push(y.clone());
            let bigger = PermGroup::new(degree, new_gens)?;
            gens_bottom_up.push(y);
            orders_bottom_up.push(p);
            chain_bottom_up.push(bigger);
        }
    }

    let n = gens_bottom_up.len();
    let gen_perms: Vec<Permutation> = gens_bottom_up.iter().rev().cloned().collect();
    let orders: Vec<u64> = orders_bottom_up.iter().rev().copied().collect();
    let chain: Vec<PermGroup> = chain_bottom_up.into_iter().rev().collect();

    // express an element of chain[level] as a normal word over gens level..n
    let decompose = |level: usize, elem: &Permutation, chain: &[PermGroup]| -> Result<NormalWord> {
        let mut out = Vec::new();
        let mut rest = elem.clone();
        for i in level..n {
            let e = orders[i];
            let mut found = false;
            for f in 0..e {
                let candidate = gen_perms[i].pow(-(f as i64)).mul(&rest);
                if chain[i + 1].contains(&candidate)? {
                    if f > 0 {
                        out.push((i, f));
                    }
                    rest = candidate;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::Internal(String::from("chain decomposition failed")));
            }
        }
        if !rest.is_identity() {
            return Err(Error::Internal(String::from("chain decomposition left a residue")));
        }
        Ok(out)
    };

    let mut powers: Vec<NormalWord> = Vec::with_capacity(n);
    for i in 0..n {
        let target = gen_perms[i].pow(orders[i] as i64);
        powers.push(decompose(i + 1, &target, &chain)?);
    }
    let mut conjugates = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let target = gen_perms[j].conjugate_by(&gen_perms[i]);
            let w = decompose(i + 1, &target, &chain)?;
            if w != alloc::vec![(j, 1)] {
                conjugates.push(((i, j), w));
            }
        }
    }
    let pres = PcPresentation::new(default_names(n), orders, powers, conjugates)?;
    if !pres.is_consistent() {
        return Err(Error::Internal(String::from(
            "pc presentation from a solvable group must be consistent",
        )));
    }
    if pres.order() != g.order() {
        return Err(Error::Internal(String::from("pc conversion changed the group order")));
    }
    let pc = PcGroup::new(pres)?;
    Ok(PcIsomorphism {
        pc,
        perm: g.clone(),
        gen_perms,
        chain,
    })
}
