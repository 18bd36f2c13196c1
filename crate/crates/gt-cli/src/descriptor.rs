//! JSON group descriptors and their conversion to core objects.

use serde::{Deserialize, Serialize};

use gt_core::error::{Error, Result};
use gt_core::matgrp::{CycMatrix, MatGroup};
use gt_core::pcgrp::{PcGroup, PcPresentation};
use gt_core::perm::{parse_cycles, PermGroup};
use gt_core::algebra::cyclotomic::Cyclotomic;

use crate::catalog;

/// Tagged union mirroring the JSON input formats.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupDescriptor {
    Perm {
        degree: u32,
        generators: Vec<String>,
    },
    Fp {
        generators: Vec<String>,
        relators: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subgroup: Option<Vec<String>>,
    },
    Pc {
        orders: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        powers: Option<std::collections::BTreeMap<String, String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        conjugates: Option<std::collections::BTreeMap<String, String>>,
    },
    Mat {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        conductor: Option<u32>,
        generators: Vec<Vec<Vec<String>>>,
    },
    Catalog {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        param: Option<u64>,
    },
}

impl GroupDescriptor {
    pub fn parse(text: &str) -> Result<GroupDescriptor> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad group JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    /// Realizes the descriptor as a permutation group.
    pub fn to_perm_group(&self, limit: usize) -> Result<PermGroup> {
        match self {
            GroupDescriptor::Perm { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|t| parse_cycles(t, *degree))
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::new(*degree, gens)
            }
            GroupDescriptor::Fp { .. } => {
                let (pres, _) = self.to_fp()?;
                pres.perm_image(limit)
            }
            GroupDescriptor::Pc { .. } => {
                let pc = self.to_pc_group()?;
                pc.presentation().regular_perm_group()
            }
            GroupDescriptor::Mat { .. } => {
                let g = self.to_mat_group()?;
                Ok(g.to_perm_group(limit)?.0)
            }
            GroupDescriptor::Catalog { name, param } => catalog::build(name, *param),
        }
    }

    /// The fp-presentation plus optional subgroup generator words.
    pub fn to_fp(&self) -> Result<(gt_core::fpgrp::FpPresentation, Vec<gt_core::fpgrp::Word>)> {
        match self {
            GroupDescriptor::Fp {
                generators,
                relators,
                subgroup,
            } => {
                let pres = gt_core::fpgrp::FpPresentation::new(generators.clone(), relators.clone())?;
                let sub = subgroup
                    .as_deref()
                    .unwrap_or(&[])
                    .iter()
                    .map(|w| pres.parse(w))
                    .collect::<Result<Vec<_>>>()?;
                Ok((pres, sub))
            }
            GroupDescriptor::Pc { .. } => {
                let pc = self.to_pc_group()?;
                Ok((pc.presentation().to_fp(), Vec::new()))
            }
            _ => Err(Error::Invalid(
                "this operation needs an fp or pc presentation".into(),
            )),
        }
    }

    /// Builds a pc-group; non-pc descriptors are converted through their
    /// permutation realization when solvable.
    pub fn to_pc_group(&self) -> Result<PcGroup> {
        match self {
            GroupDescriptor::Pc {
                orders,
                names,
                powers,
                conjugates,
            } => {
                let pres = build_pc_presentation(orders, names.as_deref(), powers, conjugates)?;
                PcGroup::new(pres)
            }
            other => {
                let g = other.to_perm_group(gt_core::limits::COSET_LIMIT)?;
                let iso = gt_core::pcgrp::pc_from_solvable(&g, gt_core::limits::SUBGROUP_ORDER_CAP)?;
                Ok(iso.pc_group().clone())
            }
        }
    }

    /// Only the pc variant carries a presentation usable for consistency
    /// checking without assuming consistency.
    pub fn to_pc_presentation(&self) -> Result<PcPresentation> {
        match self {
            GroupDescriptor::Pc {
                orders,
                names,
                powers,
                conjugates,
            } => build_pc_presentation(orders, names.as_deref(), powers, conjugates),
            _ => Err(Error::Invalid("this operation needs a pc presentation".into())),
        }
    }

    pub fn to_mat_group(&self) -> Result<MatGroup> {
        match self {
            GroupDescriptor::Mat {
                conductor,
                generators,
            } => {
                let mut mats = Vec::with_capacity(generators.len());
                for rows in generators {
                    let dim = rows.len();
                    let mut entries = Vec::with_capacity(dim * dim);
                    for row in rows {
                        if row.len() != dim {
                            return Err(Error::Invalid("matrix rows must be square".into()));
                        }
                        for cell in row {
                            let value = Cyclotomic::parse(cell)?;
                            if let Some(n) = conductor {
                                if n % value.conductor() != 0 {
                                    return Err(Error::Invalid(format!(
                                        "entry `{cell}` does not lie in Q(zeta_{n})"
                                    )));
                                }
                            }
                            entries.push(value);
                        }
                    }
                    mats.push(CycMatrix::from_entries(dim, entries)?);
                }
                MatGroup::new(mats)
            }
            _ => Err(Error::Invalid("this operation needs a matrix group".into())),
        }
    }

    /// Canonical descriptor for a permutation group, used for emitted JSON.
    pub fn from_perm_group(g: &PermGroup) -> GroupDescriptor {
        GroupDescriptor::Perm {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.format_cycles()).collect(),
        }
    }
}

fn build_pc_presentation(
    orders: &[u64],
    names: Option<&[String]>,
    powers: &Option<std::collections::BTreeMap<String, String>>,
    conjugates: &Option<std::collections::BTreeMap<String, String>>,
) -> Result<PcPresentation> {
    let n = orders.len();
    let names: Vec<String> = match names {
        Some(ns) => ns.to_vec(),
        None => {
            if n > 26 {
                return Err(Error::Invalid(
                    "give explicit names for more than 26 generators".into(),
                ));
            }
            (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        }
    };
    let find = |name: &str| -> Result<usize> {
        names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))
    };
    // a normal word like "b^2*c" parsed against the names
    let parse_normal = |text: &str| -> Result<Vec<(usize, u64)>> {
        let t = text.trim();
        if t == "id" || t == "1" || t.is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for factor in t.split('*') {
            let f = factor.trim();
            let (name, exp) = match f.find('^') {
                Some(pos) => {
                    let e: u64 = f[pos + 1..]
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
                    (&f[..pos], e)
                }
                None => (f, 1),
            };
            let idx = find(name.trim())?;
            if exp == 0 {
                continue;
            }
            out.push((idx, exp));
        }
        Ok(out)
    };

    let mut power_words = vec![Vec::new(); n];
    if let Some(map) = powers {
        for (key, value) in map {
            // key form: "a" or "a^2"
            let name = key.split('^').next().unwrap_or(key).trim();
            let idx = find(name)?;
            power_words[idx] = parse_normal(value)?;
        }
    }
    let mut conj_words = Vec::new();
    if let Some(map) = conjugates {
        for (key, value) in map {
            // key form: "b^a" meaning the conjugate of b by a
            let mut parts = key.splitn(2, '^');
            let target = parts.next().unwrap_or("").trim();
            let by = parts
                .next()
                .ok_or_else(|| Error::Parse(format!("conjugate key `{key}` must look like b^a")))?
                .trim();
            let j = find(target)?;
            let i = find(by)?;
            conj_words.push(((i, j), parse_normal(value)?));
        }
    }
    PcPresentation::new(names, orders.to_vec(), power_words, conj_words)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fp_round_trip() {
        let text = r#"{"type":"fp","generators":["a","b"],"relators":["a^2","b^2","(a*b)^5"]}"#;
        let d = GroupDescriptor::parse(text).unwrap();
        let g = d.to_perm_group(1000).unwrap();
        assert_eq!(g.order(), 10);
        let again = GroupDescriptor::parse(&d.to_json()).unwrap();
        assert_eq!(d, again);
    }

    #[test]
    fn parse_pc() {
        let text = r#"{"type":"pc","orders":[2,5],"conjugates":{"b^a":"b^4"}}"#;
        let d = GroupDescriptor::parse(text).unwrap();
        let pc = d.to_pc_group().unwrap();
        assert_eq!(pc.order(), 10);
    }

    #[test]
    fn parse_mat() {
        let text = r#"{"type":"mat","conductor":20,"generators":[[["-1","0"],["0","1"]],[["1/2*z5^4+1/2*z5","-1/2*z20^6+1/2*z20^2+1/2*z20^-2"],["0","1"]]]}"#;
        // a syntactically valid matrix descriptor parses even when the
        // entries are not a finite group; closure failures come later
        let d = GroupDescriptor::parse(text);
        assert!(d.is_ok());
    }

    #[test]
    fn parse_perm_degree_checks() {
        let text = r#"{"type":"perm","degree":3,"generators":["(1,4)"]}"#;
        let d = GroupDescriptor::parse(text).unwrap();
        assert!(d.to_perm_group(100).is_err());
    }
}
