//! Command-line front end: parse group descriptions, dispatch operations,
//! render text or JSON.

pub mod catalog;
pub mod descriptor;
pub mod render;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use descriptor::GroupDescriptor;
use gt_core::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "gt",
    about = "Exact-arithmetic computational group theory at desk scale",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// JSON file describing the group.
    #[arg(long, value_name = "FILE", conflicts_with = "catalog")]
    input: Option<PathBuf>,
    /// Built-in catalog group (cyclic, dihedral, symmetric, alternating,
    /// quaternion8, sl25).
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
    /// Parameter for the catalog group.
    #[arg(long, value_name = "N", requires = "catalog")]
    param: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Resource cap applied to this invocation (overrides GT_LIMIT).
    #[arg(long, value_name = "N")]
    limit: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Best-effort isomorphism type of the group.
    Describe(GroupArgs),
    /// Exact group order.
    Order(GroupArgs),
    /// Orbits of the natural action (or of a vector for matrix groups).
    Orbits {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated cyclotomic entries of a start vector (matrix groups).
        #[arg(long, value_name = "V")]
        vector: Option<String>,
    },
    /// Faithful transitive permutation representation of minimal degree.
    OptimalPermRep(GroupArgs),
    /// Todd-Coxeter coset enumeration over a finitely presented group.
    CosetEnumerate {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated subgroup generator words; defaults to trivial.
        #[arg(long, value_name = "WORDS")]
        subgroup: Option<String>,
    },
    /// Invariant factors of the abelianization of an fp-group.
    AbelianInvariants(GroupArgs),
    /// Consistency check for a pc-presentation.
    Consistency(GroupArgs),
    /// Ordinary character table.
    CharTable(GroupArgs),
    /// Second cohomology of a module given by a pc-group and action matrices.
    H2(GroupArgs),
    /// Absolutely irreducible representations over a finite splitting field.
    Irreps {
        #[command(flatten)]
        group: GroupArgs,
        /// Field size q with q = 1 (mod exp(G)).
        #[arg(long, value_name = "Q")]
        q: u64,
    },
    /// Whether pairs from two classes generate the group.
    GenerationCheck {
        #[command(flatten)]
        group: GroupArgs,
        /// Two class names, e.g. 3a,5a.
        #[arg(long, value_name = "C1,C2")]
        classes: String,
    },
}

/// Caps for the current invocation; --limit and GT_LIMIT override all.
#[derive(Clone, Copy)]
struct Caps {
    elements: u64,
    subgroups: u64,
    cosets: usize,
    closure: usize,
}

impl Caps {
    fn from(flag: Option<u64>) -> Caps {
        let env = std::env::var("GT_LIMIT").ok().and_then(|v| v.parse::<u64>().ok());
        match flag.or(env) {
            Some(n) => Caps {
                elements: n,
                subgroups: n,
                cosets: n as usize,
                closure: n as usize,
            },
            None => Caps {
                elements: gt_core::limits::ELEMENT_CAP,
                subgroups: gt_core::limits::SUBGROUP_ORDER_CAP,
                cosets: gt_core::limits::COSET_LIMIT,
                closure: gt_core::limits::CLOSURE_CAP,
            },
        }
    }
}

/// Runs the tool on the given arguments; returns (exit code, stdout, stderr).
pub fn execute<I, S>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own help/version output on "errors"
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                (EXIT_INPUT, String::new(), rendered)
            } else {
                (EXIT_OK, rendered, String::new())
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => (EXIT_OK, out, String::new()),
        Err(e) => {
            let code = match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            };
            (code, String::new(), format!("error: {e}\n"))
        }
    }
}

fn load_descriptor(args: &GroupArgs) -> Result<GroupDescriptor, Error> {
    match (&args.input, &args.catalog) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            GroupDescriptor::parse(&text)
        }
        (None, Some(name)) => Ok(GroupDescriptor::Catalog {
            name: name.clone(),
            param: args.param,
        }),
        (None, None) => Err(Error::Invalid(
            "give a group via --input FILE or --catalog NAME".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn load_raw(args: &GroupArgs) -> Result<serde_json::Value, Error> {
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| Error::Invalid("this subcommand needs --input FILE".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))
}

fn order_value(order: u128) -> serde_json::Value {
    if let Ok(small) = u64::try_from(order) {
        json!(small)
    } else {
        json!(order.to_string())
    }
}

fn dispatch(cmd: Command) -> Result<String, Error> {
    match cmd {
        Command::Describe(args) => {
            let caps = Caps::from(args.limit);
            let d = load_descriptor(&args)?;
            let g = d.to_perm_group(caps.cosets)?;
            let text = g.describe(caps.elements)?;
            Ok(if args.json {
                format!("{}\n", json!({ "describe": text }))
            } else {
                format!("{text}\n")
            })
        }
        Command::Order(args) => {
            let caps = Caps::from(args.limit);
            let d = load_descriptor(&args)?;
            let order = match &d {
                GroupDescriptor::Fp { .. } => {
                    let (pres, _) = d.to_fp()?;
                    pres.perm_image(caps.cosets)?.order()
                }
                _ => d.to_perm_group(caps.cosets)?.order(),
            };
            Ok(if args.json {
                format!("{}\n", json!({ "order": order_value(order) }))
            } else {
                format!("{order}\n")
            })
        }
        Command::Orbits { group, vector } => {
            let caps = Caps::from(group.limit);
            let d = load_descriptor(&group)?;
            if let Some(v) = vector {
                let mat = d.to_mat_group()?;
                let entries = v
                    .split(',')
                    .map(gt_core::algebra::cyclotomic::Cyclotomic::parse)
                    .collect::<Result<Vec<_>, _>>()?;
                let orbit = mat.vector_orbit(&entries, caps.closure)?;
                let rendered: Vec<Vec<String>> = orbit
                    .iter()
                    .map(|pt| pt.iter().map(|e| e.format()).collect())
                    .collect();
                return Ok(if group.json {
                    format!("{}\n", json!({ "orbit": rendered }))
                } else {
                    let mut out = String::new();
                    for pt in rendered {
                        out.push_str(&format!("({})\n", pt.join(", ")));
                    }
                    out
                });
            }
            let g = d.to_perm_group(caps.cosets)?;
            let orbits = gt_core::gset::natural_orbits(&g);
            Ok(if group.json {
                format!("{}\n", json!({ "orbits": orbits }))
            } else {
                let mut out = String::new();
                for orbit in orbits {
                    let pts: Vec<String> = orbit.iter().map(|p| p.to_string()).collect();
                    out.push_str(&format!("[{}]\n", pts.join(", ")));
                }
                out
            })
        }
        Command::OptimalPermRep(args) => {
            let caps = Caps::from(args.limit);
            let d = load_descriptor(&args)?;
            let g = d.to_perm_group(caps.cosets)?;
            let hom = gt_core::gset::optimal_perm_rep(&g, caps.subgroups)?;
            let image = hom.image_group();
            let out_desc = GroupDescriptor::from_perm_group(&image);
            Ok(if args.json {
                format!(
                    "{}\n",
                    json!({
                        "degree": hom.degree,
                        "images": hom.images.iter().map(|p| p.format_cycles()).collect::<Vec<_>>(),
                        "group": serde_json::to_value(&out_desc).unwrap(),
                    })
                )
            } else {
                let mut out = format!("degree {}\n", hom.degree);
                for (i, p) in hom.images.iter().enumerate() {
                    out.push_str(&format!("generator {} -> {}\n", i + 1, p.format_cycles()));
                }
                out
            })
        }
        Command::CosetEnumerate { group, subgroup } => {
            let caps = Caps::from(group.limit);
            let d = load_descriptor(&group)?;
            let (pres, mut sub) = d.to_fp()?;
            if let Some(words) = subgroup {
                for w in words.split(',') {
                    sub.push(pres.parse(w.trim())?);
                }
            }
            let table = gt_core::fpgrp::todd_coxeter(&pres, &sub, caps.cosets)?;
            Ok(if group.json {
                format!("{}\n", json!({ "cosets": table.count }))
            } else {
                format!("{}\n", table.count)
            })
        }
        Command::AbelianInvariants(args) => {
            let d = load_descriptor(&args)?;
            let (pres, _) = d.to_fp()?;
            let invariants = pres.abelian_invariants();
            Ok(if args.json {
                format!("{}\n", json!({ "invariants": invariants }))
            } else {
                let parts: Vec<String> = invariants.iter().map(|d| d.to_string()).collect();
                format!("[{}]\n", parts.join(", "))
            })
        }
        Command::Consistency(args) => {
            let d = load_descriptor(&args)?;
            let pres = d.to_pc_presentation()?;
            let consistent = pres.is_consistent();
            Ok(if args.json {
                if consistent {
                    format!(
                        "{}\n",
                        json!({ "consistent": true, "order": order_value(pres.order()) })
                    )
                } else {
                    format!("{}\n", json!({ "consistent": false }))
                }
            } else if consistent {
                format!("consistent (order {})\n", pres.order())
            } else {
                "inconsistent\n".to_string()
            })
        }
        Command::CharTable(args) => {
            let caps = Caps::from(args.limit);
            let d = load_descriptor(&args)?;
            let g = d.to_perm_group(caps.cosets)?;
            let t = gt_core::chartab::character_table(&g, caps.elements)?;
            t.verify_orthogonality()?;
            Ok(if args.json {
                let irreducibles: Vec<Vec<String>> = t
                    .irreducibles
                    .iter()
                    .map(|row| row.iter().map(|v| v.format()).collect())
                    .collect();
                let power_maps: BTreeMap<String, Vec<usize>> = t
                    .power_maps
                    .iter()
                    .map(|(p, m)| (p.to_string(), m.clone()))
                    .collect();
                format!(
                    "{}\n",
                    json!({
                        "order": t.order,
                        "classes": t.class_names,
                        "class_sizes": t.class_sizes,
                        "centralizer_orders": t.centralizer_orders,
                        "element_orders": t.element_orders,
                        "power_maps": power_maps,
                        "irreducibles": irreducibles,
                    })
                )
            } else {
                render::character_table_text(&t)
            })
        }
        Command::H2(args) => {
            let raw = load_raw(&args)?;
            let module = parse_h2_input(&raw)?;
            let res = gt_core::cohomology::h2(&module)?;
            let labels = relation_labels(module.group().presentation());
            let reps: Vec<BTreeMap<String, Vec<i64>>> = res
                .representatives
                .iter()
                .map(|c| {
                    labels
                        .iter()
                        .cloned()
                        .zip(c.tails.iter().cloned())
                        .collect()
                })
                .collect();
            Ok(if args.json {
                format!(
                    "{}\n",
                    json!({ "invariants": res.invariants, "representatives": reps })
                )
            } else {
                let mut out = String::new();
                let parts: Vec<String> = res.invariants.iter().map(|d| d.to_string()).collect();
                out.push_str(&format!("H2 invariants: [{}]\n", parts.join(", ")));
                for (i, rep) in reps.iter().enumerate() {
                    out.push_str(&format!("representative {}:\n", i + 1));
                    for (label, tail) in rep {
                        let t: Vec<String> = tail.iter().map(|x| x.to_string()).collect();
                        out.push_str(&format!("  {label}: ({})\n", t.join(", ")));
                    }
                }
                out
            })
        }
        Command::Irreps { group, q } => {
            let d = load_descriptor(&group)?;
            let pc = d.to_pc_group()?;
            let reps = gt_core::modrep::bruckner_irreducibles(&pc, q)?;
            render_irreps(&group, &pc, reps)
        }
        Command::GenerationCheck { group, classes } => {
            let caps = Caps::from(group.limit);
            let d = load_descriptor(&group)?;
            let g = d.to_perm_group(caps.cosets)?;
            let t = gt_core::chartab::character_table(&g, caps.elements)?;
            let mut parts = classes.split(',');
            let (c1, c2) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => (a.trim(), b.trim()),
                _ => {
                    return Err(Error::Invalid(
                        "--classes wants exactly two names, e.g. 3a,5a".into(),
                    ))
                }
            };
            let find = |name: &str| -> Result<usize, Error> {
                t.class_names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| {
                        Error::Invalid(format!(
                            "unknown class `{name}`; classes are {}",
                            t.class_names.join(", ")
                        ))
                    })
            };
            let (i1, i2) = (find(c1)?, find(c2)?);
            let res = gt_core::chartab::generation_check(&g, &t, i1, i2, caps.subgroups)?;
            use gt_core::chartab::GenerationOutcome;
            let (label, witnesses) = match &res.outcome {
                GenerationOutcome::AllPairsGenerate => ("AllPairsGenerate", None),
                GenerationOutcome::NoPairGenerates => ("NoPairGenerates", None),
                GenerationOutcome::Mixed {
                    generating,
                    non_generating,
                } => (
                    "Mixed",
                    Some((
                        (generating.0.format_cycles(), generating.1.format_cycles()),
                        (
                            non_generating.0.format_cycles(),
                            non_generating.1.format_cycles(),
                        ),
                    )),
                ),
            };
            Ok(if group.json {
                let mut obj = json!({
                    "outcome": label,
                    "by_criterion": res.by_criterion,
                });
                if let Some((gpair, npair)) = witnesses {
                    obj["generating"] = json!([gpair.0, gpair.1]);
                    obj["non_generating"] = json!([npair.0, npair.1]);
                }
                format!("{obj}\n")
            } else {
                let how = if res.by_criterion {
                    " (by the permutation character criterion)"
                } else {
                    " (by exhaustive pair check)"
                };
                let mut out = format!("{label}{how}\n");
                if let Some((gpair, npair)) = witnesses {
                    out.push_str(&format!("generating pair: {} , {}\n", gpair.0, gpair.1));
                    out.push_str(&format!("non-generating pair: {} , {}\n", npair.0, npair.1));
                }
                out
            })
        }
    }
}

fn relation_labels(pres: &gt_core::pcgrp::PcPresentation) -> Vec<String> {
    let n = pres.generator_count();
    let mut out: Vec<String> = (0..n)
        .map(|i| format!("{}^{}", pres.names()[i], pres.order_of(i)))
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(format!("{}^{}", pres.names()[j], pres.names()[i]));
        }
    }
    out
}

fn parse_h2_input(raw: &serde_json::Value) -> Result<gt_core::cohomology::GModule, Error> {
    let group_value = raw
        .get("group")
        .ok_or_else(|| Error::Invalid("h2 input needs a `group` field".into()))?;
    let d: GroupDescriptor = serde_json::from_value(group_value.clone())
        .map_err(|e| Error::Parse(format!("bad group JSON: {e}")))?;
    let pc = d.to_pc_group()?;
    let invariants: Vec<u64> = raw
        .get("module")
        .and_then(|m| m.get("invariants"))
        .and_then(|v| serde_json::from_value(v.clone()).ok())
        .ok_or_else(|| Error::Invalid("h2 input needs module.invariants".into()))?;
    let n = pc.presentation().generator_count();
    let r = invariants.len();
    let action: Vec<Vec<Vec<i64>>> = match raw.get("action") {
        None => {
            let mut id = vec![vec![0i64; r]; r];
            for (i, row) in id.iter_mut().enumerate() {
                row[i] = 1;
            }
            vec![id; n]
        }
        Some(value) => {
            let map: BTreeMap<String, Vec<Vec<i64>>> = serde_json::from_value(value.clone())
                .map_err(|e| Error::Parse(format!("bad action JSON: {e}")))?;
            let names = pc.presentation().names().to_vec();
            let mut out = Vec::with_capacity(n);
            for name in &names {
                let m = map.get(name).ok_or_else(|| {
                    Error::Invalid(format!("action is missing generator `{name}`"))
                })?;
                out.push(m.clone());
            }
            out
        }
    };
    gt_core::cohomology::GModule::new(pc, invariants, action)
}

fn render_irreps(
    group: &GroupArgs,
    pc: &gt_core::pcgrp::PcGroup,
    reps: gt_core::modrep::RepSet,
) -> Result<String, Error> {
    let pres = pc.presentation();
    let field = &reps.field;
    // lifted character values on the conjugacy classes of the regular image
    let perm = pres.regular_perm_group()?;
    let classes = perm.conjugacy_classes(gt_core::limits::ELEMENT_CAP)?;
    let elements = pres.elements();
    let perm_of = |e: &gt_core::pcgrp::PcElem| {
        let mut acc = gt_core::perm::Permutation::identity(perm.degree());
        for (i, &f) in e.exponents().iter().enumerate() {
            acc = acc.mul(&perm.generators()[i].pow(f as i64));
        }
        acc
    };
    let mut class_reps: Vec<Option<gt_core::pcgrp::PcElem>> = vec![None; classes.count()];
    for e in &elements {
        let c = classes.class_of(&perm_of(e)).expect("element in its own group");
        if class_reps[c].is_none() {
            class_reps[c] = Some(e.clone());
        }
    }
    let names = classes.names();
    let mut rep_objs = Vec::new();
    let mut dims = Vec::new();
    for module in &reps.modules {
        dims.push(module.dim);
        let mats: BTreeMap<String, Vec<Vec<String>>> = pres
            .names()
            .iter()
            .cloned()
            .zip(module.gens.iter().map(|m| {
                (0..m.rows)
                    .map(|r| (0..m.cols).map(|c| field.format_element(m[(r, c)])).collect())
                    .collect()
            }))
            .collect();
        let mut character = BTreeMap::new();
        for (c, e) in class_reps.iter().enumerate() {
            let e = e.as_ref().expect("every class has a representative");
            let mat = module.eval(e.exponents());
            let o = pres.element_order(e);
            let value = gt_core::modrep::lift_matrix_trace(field, &mat, o)?;
            character.insert(names[c].clone(), value.format());
        }
        rep_objs.push(json!({
            "dimension": module.dim,
            "matrices": mats,
            "character": character,
        }));
    }
    Ok(if group.json {
        format!(
            "{}\n",
            json!({
                "q": field.order(),
                "dimensions": dims,
                "representations": rep_objs,
            })
        )
    } else {
        let mut out = format!(
            "{} absolutely irreducible representations over GF({})\n",
            dims.len(),
            field.order()
        );
        let parts: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("dimensions: [{}]\n", parts.join(", ")));
        for obj in &rep_objs {
            out.push_str(&format!(
                "dim {}: character {}\n",
                obj["dimension"],
                obj["character"]
            ));
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["gt"];
        argv.extend(args);
        execute(argv)
    }

    #[test]
    fn describe_catalog_groups() {
        let (code, out, _) = run(&["describe", "--catalog", "dihedral", "--param", "10"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "D 10\n");
        let (code, out, _) = run(&["order", "--catalog", "sl25"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "120\n");
    }

    #[test]
    fn unknown_flags_exit_two() {
        let (code, _, err) = run(&["describe", "--frobnicate"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(!err.is_empty());
        let (code, _, _) = run(&["no-such-command"]);
        assert_eq!(code, EXIT_INPUT);
    }

    #[test]
    fn missing_group_is_an_input_error() {
        let (code, _, err) = run(&["order"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--input"));
    }
}
