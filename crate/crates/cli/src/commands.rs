use std::path::Path;

use charblock::blocks::{
    block_partition, decomposition_and_cartan, default_star, induced_block, principal_indecomposables,
    robinson_block_count, BlockPartition, BrauerHom, InducedBlock,
};
use charblock::charops::{decompose, frobenius_kernel, induce, ClassFunction, FusionMap};
use charblock::chartab::{
    commutator_counts, structure_report, table_determinant, table_of_group, verify_table, CharacterTable,
    DixonOptions, GroupData,
};
use charblock::cyclo::Cyclo;
use charblock::fpg::{center_radical, verify_block_idempotents};
use charblock::io;
use charblock::numth::factorize;
use charblock::permgrp::{
    conjugacy_data, parse_generators, parse_group_with_cap, parse_perm, PermGroup, Subgroup, DEFAULT_MAX_ORDER,
};
use serde_json::{json, Value};

use crate::render::{grid, int_matrix, one_based, table_text};
use crate::{Cli, CliError, Command, Format};

type Out = Result<String, CliError>;

const CAP_VAR: &str = "CHARBLOCK_MAX_ORDER";

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
}

fn stem(path: &str) -> String {
    Path::new(path)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("G")
        .to_string()
}

fn cap() -> Result<usize, CliError> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn load_group(path: &str) -> Result<PermGroup, CliError> {
    Ok(parse_group_with_cap(&read(path)?, cap()?)?)
}

fn options(cli: &Cli) -> DixonOptions {
    DixonOptions {
        seed: cli.seed,
        ..DixonOptions::default()
    }
}

fn group_data(cli: &Cli, path: &str) -> Result<GroupData, CliError> {
    Ok(GroupData::new(&stem(path), load_group(path)?, &options(cli))?)
}

/// A generator file, or generators in cycle notation separated by `;`.
fn parse_subgroup(g: &PermGroup, arg: &str) -> Result<Subgroup, CliError> {
    let perms = if Path::new(arg).is_file() {
        let (degree, perms) = parse_generators(&read(arg)?)?;
        if degree != g.degree() {
            return Err(CliError::Usage(format!(
                "subgroup acts on {degree} points, the group on {}",
                g.degree()
            )));
        }
        perms
    } else {
        arg.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| parse_perm(s, g.degree()))
            .collect::<charblock::Result<Vec<_>>>()?
    };
    if perms.is_empty() {
        return Err(CliError::Usage(format!("no generators in {arg:?}")));
    }
    Ok(g.subgroup(&perms)?)
}

fn load_table(path: &str) -> Result<CharacterTable, CliError> {
    Ok(io::table_from_json(&read(path)?)?)
}

/// A table file (JSON) or a group file, told apart by content.
fn table_or_group(cli: &Cli, path: &str) -> Result<CharacterTable, CliError> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        Ok(io::table_from_json(&text)?)
    } else {
        let g = parse_group_with_cap(&text, cap()?)?;
        let t = table_of_group(&stem(path), &g, &options(cli))?;
        verify_table(&t)?;
        Ok(t)
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(T::to_string).collect()
}

fn class_names(t: &CharacterTable, ks: impl IntoIterator<Item = usize>) -> Vec<String> {
    ks.into_iter().map(|k| t.class(k).name.clone()).collect()
}

pub fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Classes { group } => classes(cli, group),
        Command::Chartab { group } => chartab(cli, group),
        Command::Verify { table } => verify(cli, table),
        Command::Blocks { input, p } => blocks(cli, input, *p),
        Command::Decompose { table, brauer } => decompose_cmd(cli, table, brauer),
        Command::Induce {
            group,
            subgroup,
            charfile,
        } => induce_cmd(cli, group, subgroup, charfile),
        Command::InducedBlock { group, subgroup, p } => induced_block_cmd(cli, group, subgroup, *p),
        Command::BrauerHom { group, psubgroup } => brauer_hom(cli, group, psubgroup),
        Command::Robinson { group, p, d } => robinson(cli, group, *p, d),
        Command::FrobeniusKernel { group, subgroup } => frobenius(cli, group, subgroup),
        Command::Oracle { group, p } => oracle(cli, group, *p),
        Command::Report { table } => report(cli, table),
    }
}

fn classes(cli: &Cli, path: &str) -> Out {
    let g = load_group(path)?;
    let cc = conjugacy_data(&g);
    let rows: Vec<(String, u64, u64, u64, String)> = (0..cc.num_classes())
        .map(|k| {
            (
                cc.names()[k].clone(),
                cc.rep_orders()[k],
                cc.sizes()[k],
                cc.centralizer_orders()[k],
                cc.rep(k).to_string(),
            )
        })
        .collect();
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "order": g.order(),
            "classes": rows.iter().map(|(n, o, s, c, r)| json!({
                "name": n, "order": o, "size": s, "centralizer": c, "representative": r
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut table = vec![(
                "class".to_string(),
                strings(&["order", "size", "centralizer", "representative"]),
            )];
            for (n, o, s, c, r) in rows {
                table.push((n, vec![o.to_string(), s.to_string(), c.to_string(), r]));
            }
            format!("{} classes, order {}\n{}", cc.num_classes(), g.order(), grid(&table))
        }
    })
}

fn chartab(cli: &Cli, path: &str) -> Out {
    let g = load_group(path)?;
    let t = table_of_group(&stem(path), &g, &options(cli))?;
    verify_table(&t)?;
    Ok(match cli.format {
        Format::Json => io::table_to_json(&t),
        Format::Text => table_text(&t),
    })
}

fn verify(cli: &Cli, path: &str) -> Out {
    let t = load_table(path)?;
    let orth = verify_table(&t)?;
    let det = table_determinant(&t);
    if !det.check {
        return Err(charblock::Error::Verification(format!(
            "determinant {} does not square to the product of centralizer orders",
            det.value
        ))
        .into());
    }
    let kappa = commutator_counts(&t)?;
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "name": t.name(),
            "ok": true,
            "centralizers": strings(&orth.centralizer_diagonal),
            "determinant": det.value.to_string(),
            "commutator_counts": kappa,
        })),
        Format::Text => format!(
            "{}: ok ({} classes, order {}, determinant {})\n",
            t.name(),
            t.num_classes(),
            t.order(),
            det.value
        ),
    })
}

fn blocks_json(t: &CharacterTable, part: &BlockPartition) -> Value {
    json!({
        "name": t.name(),
        "prime": part.prime,
        "star": { "conductor": part.star.m_prime(), "factor": part.star.factor() },
        "blocks": part.blocks.iter().map(|b| json!({
            "irr": b.irr.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "defect": b.defect,
            "heights": b.heights,
            "ibr_count": b.ibr_count,
            "principal": b.principal,
            "lambda": strings(&b.lambda),
        })).collect::<Vec<_>>(),
    })
}

fn blocks_text(t: &CharacterTable, part: &BlockPartition) -> String {
    let mut rows = vec![(
        "block".to_string(),
        strings(&["defect", "|IBr|", "characters", "heights"]),
    )];
    for (i, b) in part.blocks.iter().enumerate() {
        rows.push((
            format!("B{}", i + 1),
            vec![
                b.defect.to_string(),
                b.ibr_count.to_string(),
                one_based(&b.irr),
                format!("{:?}", b.heights),
            ],
        ));
    }
    let mut lambda = vec![("lambda".to_string(), class_names(t, 0..t.num_classes()))];
    for (i, b) in part.blocks.iter().enumerate() {
        lambda.push((format!("B{}", i + 1), strings(&b.lambda)));
    }
    format!(
        "{}: {} blocks for p = {}\n\n{}\n{}",
        t.name(),
        part.num_blocks(),
        part.prime,
        grid(&rows),
        grid(&lambda)
    )
}

fn blocks(cli: &Cli, path: &str, p: u64) -> Out {
    let t = table_or_group(cli, path)?;
    let part = block_partition(&t, &default_star(&t, p)?)?;
    Ok(match cli.format {
        Format::Json => pretty(&blocks_json(&t, &part)),
        Format::Text => blocks_text(&t, &part),
    })
}

fn decompose_cmd(cli: &Cli, table: &str, brauer: &str) -> Out {
    let t = load_table(table)?;
    let phi = io::brauer_from_json(&read(brauer)?)?;
    let data = decomposition_and_cartan(&t, &phi)?;
    principal_indecomposables(&data, &t, &phi)?;
    let mut part = block_partition(&t, &phi.star()?)?;
    part.attach_decomposition(&data)?;
    let file = io::decomposition_file(&part, &data);
    Ok(match cli.format {
        Format::Json => io::decomposition_to_json(&file),
        Format::Text => {
            let mut out = format!(
                "{} mod {}: {} blocks, det C = {}\n",
                t.name(),
                data.prime,
                file.blocks.len(),
                data.cartan_det
            );
            for (i, b) in file.blocks.iter().enumerate() {
                out.push_str(&format!(
                    "\nB{}: defect {}, characters {:?}, Brauer characters {:?}\nD\n{}C\n{}",
                    i + 1,
                    b.defect,
                    b.irr,
                    b.ibr,
                    int_matrix(&b.d),
                    int_matrix(&b.c)
                ));
            }
            out
        }
    })
}

fn induce_cmd(cli: &Cli, group: &str, subgroup: &str, charfile: &str) -> Out {
    let g = group_data(cli, group)?;
    let sub = parse_subgroup(&g.group, subgroup)?;
    let h = g.subgroup("H", &sub, &options(cli))?;
    let values = io::class_function_from_json(&read(charfile)?)?;
    let phi = ClassFunction::new(&h.table, values)?;
    let fusion = FusionMap::between(&h, &g)?;
    let ind = induce(&phi, &fusion, &g.table)?;
    let dec = decompose(&ind);
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "subgroup_classes": class_names(&h.table, 0..h.table.num_classes()),
            "fusion": fusion.map().iter().map(|k| k + 1).collect::<Vec<_>>(),
            "values": strings(ind.values()),
            "constituents": strings(&dec.coeffs),
            "is_character": dec.is_character,
        })),
        Format::Text => {
            let rows = vec![
                ("K".to_string(), class_names(&g.table, 0..g.table.num_classes())),
                ("induced".to_string(), strings(ind.values())),
                ("".to_string(), Vec::new()),
                ("X".to_string(), (1..=dec.coeffs.len()).map(|i| format!("X.{i}")).collect()),
                ("multiplicity".to_string(), strings(&dec.coeffs)),
            ];
            format!(
                "subgroup of order {} with classes {}\n\n{}",
                h.table.order(),
                class_names(&h.table, 0..h.table.num_classes()).join(" "),
                grid(&rows)
            )
        }
    })
}

fn induced_block_cmd(cli: &Cli, group: &str, subgroup: &str, p: u64) -> Out {
    let g = group_data(cli, group)?;
    let sub = parse_subgroup(&g.group, subgroup)?;
    let h = g.subgroup("H", &sub, &options(cli))?;
    let gpart = block_partition(&g.table, &default_star(&g.table, p)?)?;
    let hpart = block_partition(&h.table, &gpart.star)?;
    let mut results = Vec::new();
    for b in 0..hpart.num_blocks() {
        results.push((b, induced_block(&g, &gpart, &h, &hpart, b)?));
    }
    let describe = |r: &InducedBlock| match r {
        InducedBlock::Block(b) => format!("B{}", b + 1),
        InducedBlock::NotMultiplicative => "undefined".to_string(),
        InducedBlock::NoMatch => "undefined (no matching block)".to_string(),
    };
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "prime": p,
            "blocks": results.iter().map(|(b, r)| json!({
                "subgroup_block": b + 1,
                "subgroup_irr": hpart.blocks[*b].irr.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "lambda": strings(&r.lambda),
                "induced": r.result.block().map(|x| x + 1),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut rows = vec![(
                "b".to_string(),
                [vec!["characters".to_string()], class_names(&g.table, 0..g.table.num_classes()), vec!["b^G".to_string()]].concat(),
            )];
            for (b, r) in &results {
                rows.push((
                    format!("b{}", b + 1),
                    [vec![one_based(&hpart.blocks[*b].irr)], strings(&r.lambda), vec![describe(&r.result)]].concat(),
                ));
            }
            format!("induced {p}-blocks\n\n{}", grid(&rows))
        }
    })
}

fn prime_of(order: usize) -> Result<u64, CliError> {
    match factorize(order as u64).as_slice() {
        [(p, _)] => Ok(*p),
        _ => Err(CliError::Usage(format!(
            "subgroup of order {order} is not a nontrivial p-group"
        ))),
    }
}

fn brauer_hom(cli: &Cli, group: &str, psub: &str) -> Out {
    let g = group_data(cli, group)?;
    let sub = parse_subgroup(&g.group, psub)?;
    let p = prime_of(sub.order())?;
    let hom = BrauerHom::new(&g, p, &sub)?;
    let images: Vec<Vec<String>> = (0..g.classes.num_classes())
        .map(|k| {
            hom.image_classes(k)
                .iter()
                .map(|&l| hom.classes.names()[l].clone())
                .collect()
        })
        .collect();
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "prime": p,
            "subgroup_order": sub.order(),
            "normalizer_order": hom.normalizer.order(),
            "normalizer_classes": hom.classes.names(),
            "images": g.classes.names().iter().zip(&images).map(|(n, im)| json!({"class": n, "image": im})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let rows: Vec<(String, Vec<String>)> = g
                .classes
                .names()
                .iter()
                .zip(&images)
                .map(|(n, im)| {
                    let v = if im.is_empty() { "0".to_string() } else { im.join(" + ") };
                    (n.clone(), vec![v])
                })
                .collect();
            format!(
                "{p}-subgroup of order {}, normalizer of order {}\n\n{}",
                sub.order(),
                hom.normalizer.order(),
                grid(&rows)
            )
        }
    })
}

fn robinson(cli: &Cli, group: &str, p: u64, d: &str) -> Out {
    let g = group_data(cli, group)?;
    let sub = parse_subgroup(&g.group, d)?;
    let count = robinson_block_count(&g, p, &sub)?;
    let names = class_names(&g.table, count.classes.iter().copied());
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "prime": p,
            "defect_group_order": sub.order(),
            "classes": names,
            "matrix": count.matrix,
            "blocks": count.rank,
        })),
        Format::Text => format!(
            "blocks with defect group of order {}: {}\nclasses {}\n{}",
            sub.order(),
            count.rank,
            names.join(" "),
            int_matrix(&count.matrix)
        ),
    })
}

fn frobenius(cli: &Cli, group: &str, subgroup: &str) -> Out {
    let g = group_data(cli, group)?;
    let sub = parse_subgroup(&g.group, subgroup)?;
    let h = g.subgroup("H", &sub, &options(cli))?;
    let k = frobenius_kernel(&g, &h)?;
    let names = class_names(&g.table, k.classes.iter().copied());
    Ok(match cli.format {
        Format::Json => pretty(&json!({ "order": k.order, "classes": names })),
        Format::Text => format!("kernel of order {}: classes {}\n", k.order, names.join(" ")),
    })
}

fn oracle(cli: &Cli, group: &str, p: u64) -> Out {
    let g = group_data(cli, group)?;
    let part = block_partition(&g.table, &default_star(&g.table, p)?)?;
    let idem = verify_block_idempotents(&g, &part)?;
    let rad = center_radical(&g, &part)?;
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "prime": p,
            "blocks": idem.blocks,
            "block_center_dims": idem.block_center_dims,
            "center_dim": rad.center_dim,
            "radical_dim": rad.radical_dim,
            "nilpotency_index": rad.nilpotency_index,
            "group_sum_in_radical": rad.group_sum_in_radical,
        })),
        Format::Text => format!(
            "{} blocks: idempotents central, orthogonal, primitive, summing to 1\n\
             dim Z = {}, block dims {:?}, dim J(Z) = {}, J(Z)^{} = 0\n",
            idem.blocks, rad.center_dim, idem.block_center_dims, rad.radical_dim, rad.nilpotency_index
        ),
    })
}

fn report(cli: &Cli, path: &str) -> Out {
    let t = load_table(path)?;
    verify_table(&t)?;
    let rep = structure_report(&t);
    let det = table_determinant(&t);
    let kappa = commutator_counts(&t)?;
    let set = |s: &charblock::chartab::ClassSet| class_names(&t, s.iter().copied());
    let normals: Vec<(Vec<String>, u64)> = rep.normal_subgroups.iter().map(|(s, o)| (set(s), *o)).collect();
    Ok(match cli.format {
        Format::Json => pretty(&json!({
            "name": t.name(),
            "order": t.order(),
            "degrees": t.degrees(),
            "linear_characters": rep.linear_count,
            "derived_subgroup": set(&rep.derived_subgroup),
            "center": set(&rep.center),
            "normal_subgroups": normals.iter().map(|(s, o)| json!({"classes": s, "order": o})).collect::<Vec<_>>(),
            "kernels": rep.kernels.iter().map(set).collect::<Vec<_>>(),
            "solvable": rep.solvable,
            "nilpotent": rep.nilpotent,
            "determinant": det.value.to_string(),
            "commutator_counts": kappa,
        })),
        Format::Text => {
            let mut out = format!("{} of order {}\n", t.name(), t.order());
            out.push_str(&format!("degrees {:?}\n", t.degrees()));
            out.push_str(&format!(
                "|G:G'| = {}, G' = {{{}}}, Z(G) = {{{}}}\n",
                rep.linear_count,
                set(&rep.derived_subgroup).join(" "),
                set(&rep.center).join(" ")
            ));
            out.push_str(&format!("solvable: {}, nilpotent: {}\n", rep.solvable, rep.nilpotent));
            out.push_str("normal subgroups:\n");
            for (s, o) in &normals {
                out.push_str(&format!("  order {o}: {}\n", s.join(" ")));
            }
            let zero = Cyclo::zero();
            let with_zeros: Vec<String> = (0..t.num_irr())
                .filter(|&i| t.row(i).contains(&zero))
                .map(|i| format!("X.{}", i + 1))
                .collect();
            out.push_str(&format!("characters with zeros: {}\n", with_zeros.join(" ")));
            out.push_str(&format!("commutator counts {kappa:?}\ndeterminant {}\n", det.value));
            out
        }
    })
}
