//! Built-in constructor catalog used in place of external group databases.

use gt_core::error::{Error, Result};
use gt_core::perm::{self, PermGroup};

pub const NAMES: &[&str] = &[
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "sl25",
];

pub fn build(name: &str, param: Option<u64>) -> Result<PermGroup> {
    let need = |what: &str| -> Result<u64> {
        param.ok_or_else(|| Error::Invalid(format!("catalog `{name}` needs --param {what}")))
    };
    match name {
        "cyclic" => {
            let n = need("n")?;
            if n == 0 || n > 10_000 {
                return Err(Error::Invalid("cyclic order must be in 1..=10000".into()));
            }
            Ok(perm::cyclic_group(n as u32))
        }
        "dihedral" => {
            let m = need("m")?;
            perm::dihedral_group(m as u32)
        }
        "symmetric" => {
            let n = need("n")?;
            if n == 0 || n > 32 {
                return Err(Error::Invalid("symmetric degree must be in 1..=32".into()));
            }
            Ok(perm::symmetric_group(n as u32))
        }
        "alternating" => {
            let n = need("n")?;
            if n == 0 || n > 32 {
                return Err(Error::Invalid("alternating degree must be in 1..=32".into()));
            }
            Ok(perm::alternating_group(n as u32))
        }
        "quaternion8" => Ok(perm::quaternion_group()),
        "sl25" => Ok(perm::sl2_5()),
        other => Err(Error::Invalid(format!(
            "unknown catalog group `{other}`; available: {}",
            NAMES.join(", ")
        ))),
    }
}
