//! JSON file formats. Class indices in files are 1-based; character values
//! are strings in the cyclotomic grammar (`-1-E(3)`, `1/2*E(8)^3`, ...).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::blocks::{BlockPartition, BrauerTable, DecompData};
use crate::chartab::{CharacterTable, ClassInfo};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn one_based(k: usize, len: usize, what: &str) -> Result<usize> {
    if k == 0 || k > len {
        Err(Error::TableInconsistent(format!("{what} index {k} outside 1..{len}")))
    } else {
        Ok(k - 1)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassEntry {
    name: String,
    size: u64,
    centralizer: u64,
    order: u64,
    #[serde(default)]
    powermaps: BTreeMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    name: String,
    order: u64,
    exponent: u64,
    classes: Vec<ClassEntry>,
    irr: Vec<Vec<Cyclo>>,
}

pub fn table_to_json(t: &CharacterTable) -> String {
    let classes = t
        .classes()
        .iter()
        .enumerate()
        .map(|(k, c)| ClassEntry {
            name: c.name.clone(),
            size: c.size,
            centralizer: c.centralizer,
            order: c.order,
            powermaps: t
                .power_maps()
                .iter()
                .map(|(p, m)| (p.to_string(), m[k] + 1))
                .collect(),
        })
        .collect();
    to_json(&TableFile {
        name: t.name().to_string(),
        order: t.order(),
        exponent: t.exponent(),
        classes,
        irr: t.irr().to_vec(),
    })
}

pub fn table_from_json(text: &str) -> Result<CharacterTable> {
    let f: TableFile = serde_json::from_str(text).map_err(parse_error)?;
    let r = f.classes.len();
    let mut power_maps: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (k, c) in f.classes.iter().enumerate() {
        for (p, &img) in &c.powermaps {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::TableInconsistent(format!("power map key {p:?} is not a prime")))?;
            let map = power_maps.entry(p).or_insert_with(|| vec![usize::MAX; r]);
            map[k] = one_based(img, r, "power map")?;
        }
    }
    if let Some((p, _)) = power_maps.iter().find(|(_, m)| m.contains(&usize::MAX)) {
        return Err(Error::TableInconsistent(format!("{p}-power map is incomplete")));
    }
    let classes = f
        .classes
        .into_iter()
        .map(|c| ClassInfo {
            name: c.name,
            size: c.size,
            centralizer: c.centralizer,
            order: c.order,
        })
        .collect();
    CharacterTable::new(f.name, f.order, f.exponent, classes, power_maps, f.irr)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StarEntry {
    conductor: u64,
    factor: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BrauerFile {
    name: String,
    prime: u64,
    star: StarEntry,
    classes: Vec<String>,
    ibr: Vec<Vec<Cyclo>>,
}

pub fn brauer_to_json(b: &BrauerTable) -> String {
    to_json(&BrauerFile {
        name: b.name().to_string(),
        prime: b.prime(),
        star: StarEntry {
            conductor: b.conductor(),
            factor: b.factor().to_vec(),
        },
        classes: b.classes().to_vec(),
        ibr: b.ibr().to_vec(),
    })
}

pub fn brauer_from_json(text: &str) -> Result<BrauerTable> {
    let f: BrauerFile = serde_json::from_str(text).map_err(parse_error)?;
    BrauerTable::new(f.name, f.prime, f.star.conductor, f.star.factor, f.classes, f.ibr)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassFunctionFile {
    values: Vec<Cyclo>,
}

/// A class function file: `{"values": [...]}` with one value per class.
pub fn class_function_from_json(text: &str) -> Result<Vec<Cyclo>> {
    let f: ClassFunctionFile = serde_json::from_str(text).map_err(parse_error)?;
    Ok(f.values)
}

pub fn class_function_to_json(values: &[Cyclo]) -> String {
    to_json(&ClassFunctionFile {
        values: values.to_vec(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub irr: Vec<usize>,
    pub ibr: Vec<usize>,
    pub defect: u32,
    pub heights: Vec<u32>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<u64>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub blocks: Vec<BlockEntry>,
}

/// Per-block decomposition and Cartan matrices; the partition must have the
/// decomposition attached.
pub fn decomposition_file(part: &BlockPartition, data: &DecompData) -> DecompositionFile {
    let blocks = part
        .blocks
        .iter()
        .map(|b| {
            let d: Vec<Vec<u64>> = b
                .irr
                .iter()
                .map(|&i| b.ibr.iter().map(|&j| data.decomposition[i][j]).collect())
                .collect();
            let c = b
                .ibr
                .iter()
                .map(|&x| b.ibr.iter().map(|&y| data.cartan[x][y]).collect())
                .collect();
            BlockEntry {
                irr: b.irr.iter().map(|i| i + 1).collect(),
                ibr: b.ibr.iter().map(|j| j + 1).collect(),
                defect: b.defect,
                heights: b.heights.clone(),
                d,
                c,
            }
        })
        .collect();
    DecompositionFile { blocks }
}

pub fn decomposition_to_json(f: &DecompositionFile) -> String {
    to_json(f)
}

pub fn decomposition_from_json(text: &str) -> Result<DecompositionFile> {
    serde_json::from_str(text).map_err(parse_error)
}
