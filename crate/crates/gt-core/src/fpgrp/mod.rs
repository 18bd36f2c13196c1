//! Free groups, finitely presented groups, coset enumeration, abelianization,
//! epimorphisms with word preimages, and split-extension presentations.

mod tc;
mod word;

pub use tc::{todd_coxeter, CosetTable};
pub use word::{parse_word, Word};

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::intmat::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::pcgrp::{PcElem, PcPresentation};
use crate::perm::{PermGroup, Permutation};

/// Generators and relators of a finitely presented group.
#[derive(Clone, Debug)]
pub struct FpPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl FpPresentation {
    pub fn new<S: AsRef<str>>(names: Vec<String>, relator_texts: Vec<S>) -> Result<FpPresentation> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n == "id" || names[..i].contains(n) {
                return Err(Error::Invalid(alloc::format!("bad generator name `{n}`")));
            }
        }
        let relators = relator_texts
            .iter()
            .map(|t| parse_word(t.as_ref(), &names))
            .collect::<Result<Vec<_>>>()?;
        Ok(FpPresentation { names, relators })
    }

    pub fn from_words(names: Vec<String>, relators: Vec<Word>) -> Result<FpPresentation> {
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= names.len() {
                    return Err(Error::Invalid(String::from(
                        "relator uses an out-of-range generator",
                    )));
                }
            }
        }
        Ok(FpPresentation { names, relators })
    }

    pub fn free(names: Vec<String>) -> FpPresentation {
        FpPresentation {
            names,
            relators: Vec::new(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.names)
    }

    /// The permutation group induced on the cosets of the trivial subgroup;
    /// faithful, with order equal to the coset count.
    pub fn perm_image(&self, limit: usize) -> Result<PermGroup> {
        let table = todd_coxeter(self, &[], limit)?;
        let gens: Vec<Permutation> = (0..self.generator_count())
            .map(|i| table.generator_permutation(i))
            .collect();
        PermGroup::new(table.count as u32, gens)
    }

    /// Invariant factors of the abelianization: elementary divisors > 1 in
    /// divisibility order, followed by one 0 per free factor.
    pub fn abelian_invariants(&self) -> Vec<u64> {
        let n = self.generator_count();
        if n == 0 {
            return Vec::new();
        }
        let rows: Vec<Vec<BigInt>> = if self.relators.is_empty() {
            alloc::vec![alloc::vec![BigInt::zero(); n]]
        } else {
            self.relators
                .iter()
                .map(|r| r.exponent_sums(n).into_iter().map(BigInt::from).collect())
                .collect()
        };
        let m = IntMatrix::from_rows(rows);
        let snf = smith_normal_form(&m);
        let mut divisors: Vec<u64> = Vec::new();
        let mut rank = 0usize;
        for d in snf.diagonal() {
            let d = d.abs();
            if d.is_zero() {
                continue;
            }
            rank += 1;
            let v = d.to_u64().expect("abelian invariant fits u64");
            if v > 1 {
                divisors.push(v);
            }
        }
        divisors.sort_unstable();
        for _ in rank..n {
            divisors.push(0);
        }
        divisors
    }
}

/// An epimorphism from a free group onto a permutation group, with word
/// preimages computed from stabilizer-chain transversal words.
pub struct Epimorphism {
    group: PermGroup,
    witness: PermGroup,
}

impl Epimorphism {
    /// `images[i]` is the image of free generator i; they must generate g.
    pub fn new(g: &PermGroup, images: Vec<Permutation>) -> Result<Epimorphism> {
        let witness = PermGroup::new(g.degree(), images)?;
        if witness.order() != g.order() || !g.is_subgroup(&witness)? {
            return Err(Error::Invalid(String::from(
                "images do not generate the target group",
            )));
        }
        Ok(Epimorphism {
            group: g.clone(),
            witness,
        })
    }

    pub fn images(&self) -> &[Permutation] {
        self.witness.generators()
    }

    /// A word in the generator images evaluating to x; not unique.
    pub fn preimage(&self, x: &Permutation) -> Result<Word> {
        self.witness.preimage_word(x)
    }

    /// True iff the word evaluates to the identity in the target.
    pub fn is_relation(&self, w: &Word) -> Result<bool> {
        Ok(w.evaluate_perms(self.group.degree(), self.images())?.is_identity())
    }
}

/// Presentation of the split extension U x| V for a consistent pc-group U,
/// a finite fp-group V, and an action of the V-generators by automorphisms
/// of U (each given by images of the U-generators). The resulting order is
/// verified to be |U| * |V| by coset enumeration.
pub fn split_extension_presentation(
    u: &PcPresentation,
    v: &FpPresentation,
    act: &[Vec<PcElem>],
    limit: usize,
) -> Result<FpPresentation> {
    let nu = u.generator_count();
    let nv = v.generator_count();
    if act.len() != nv || act.iter().any(|imgs| imgs.len() != nu) {
        return Err(Error::Invalid(String::from(
            "action must give one U-generator image list per V-generator",
        )));
    }
    for imgs in act {
        u.verify_automorphism(imgs)?;
    }
    let v_order = {
        let t = todd_coxeter(v, &[], limit)?;
        t.count as u128
    };
    let expected = u.order() * v_order;

    // combined generator names: U names, then V names made distinct
    let mut names: Vec<String> = u.names().to_vec();
    for n in v.names() {
        let mut candidate = n.clone();
        while names.contains(&candidate) {
            candidate.push('v');
        }
        names.push(candidate);
    }

    let mut relators: Vec<Word> = Vec::new();
    // U relations
    for r in u.to_fp_relators() {
        relators.push(r);
    }
    // V relations, shifted
    for r in v.relators() {
        let shifted = Word::from_letters(
            r.letters().iter().map(|&(i, e)| (i + nu, e)).collect(),
        );
        relators.push(shifted);
    }
    // conjugation relations: u_i^{v_t} = act[t][i]
    for (t, imgs) in act.iter().enumerate() {
        let vg = Word::generator(nu + t, 1);
        for (i, img) in imgs.iter().enumerate() {
            let lhs = vg
                .inverse()
                .concat(&Word::generator(i, 1))
                .concat(&vg);
            let rhs = u.elem_to_word(img);
            relators.push(lhs.concat(&rhs.inverse()));
        }
    }
    let pres = FpPresentation::from_words(names, relators)?;
    let t = todd_coxeter(&pres, &[], limit)?;
    if t.count as u128 != expected {
        return Err(Error::Internal(alloc::format!(
            "split extension has order {} instead of {expected}",
            t.count
        )));
    }
    Ok(pres)
}
