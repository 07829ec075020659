#![allow(dead_code)]

pub mod decomposition;

use std::path::PathBuf;

use charblock::blocks::BrauerTable;
use charblock::chartab::{CharacterTable, DixonOptions, GroupData};
use charblock::io::{brauer_from_json, table_from_json};
use charblock::permgrp::{parse_group, Perm, Subgroup};

/// The six groups with published tables, by file stem.
pub const GOLDEN: [&str; 6] = ["s3", "a4", "s4", "sl23", "a5", "psl27"];

pub fn path(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect()
}

pub fn read(name: &str) -> String {
    std::fs::read_to_string(path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn group(name: &str) -> GroupData {
    let g = parse_group(&read(&format!("{name}.grp"))).expect("group file parses");
    GroupData::new(name, g, &DixonOptions::default()).expect("table computes")
}

pub fn golden_table(name: &str) -> CharacterTable {
    table_from_json(&read(&format!("{name}.tbl"))).expect("golden table parses")
}

pub fn golden_brauer(name: &str, p: u64) -> BrauerTable {
    brauer_from_json(&read(&format!("{name}.p{p}.brt"))).expect("golden Brauer table parses")
}

/// Primes dividing the order of a golden group.
pub fn primes(name: &str) -> &'static [u64] {
    match name {
        "s3" | "a4" | "s4" | "sl23" => &[2, 3],
        "a5" => &[2, 3, 5],
        "psl27" => &[2, 3, 7],
        _ => panic!("unknown group {name}"),
    }
}

/// Permutations in 1-based cycle notation.
pub fn perms(degree: usize, cycles: &[&[&[usize]]]) -> Vec<Perm> {
    cycles
        .iter()
        .map(|cs| {
            let cs: Vec<Vec<usize>> = cs.iter().map(|c| c.iter().map(|i| i - 1).collect()).collect();
            Perm::from_cycles(degree, &cs).expect("valid cycles")
        })
        .collect()
}

pub fn subgroup(g: &GroupData, degree: usize, cycles: &[&[&[usize]]]) -> Subgroup {
    g.group.subgroup(&perms(degree, cycles)).expect("generators lie in the group")
}

pub fn sub_data(g: &GroupData, name: &str, s: &Subgroup) -> GroupData {
    g.subgroup(name, s, &DixonOptions::default()).expect("subgroup table computes")
}
