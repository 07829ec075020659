//! Plain-text layouts.

use charblock::chartab::CharacterTable;
use charblock::cyclo::Cyclo;

fn cell(v: &Cyclo) -> String {
    if v.is_zero() {
        ".".to_string()
    } else {
        v.to_string()
    }
}

/// Rows of cells right-aligned in columns after a left-aligned label.
pub fn grid(rows: &[(String, Vec<String>)]) -> String {
    let label_w = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let ncols = rows.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| {
            rows.iter()
                .filter_map(|(_, c)| c.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for (label, cells) in rows {
        let mut line = format!("{label:<label_w$}");
        for (j, c) in cells.iter().enumerate() {
            line.push_str(&format!("  {c:>w$}", w = widths[j]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Header rows `K`, `|K|`, `|C_G(x_K)|`, power maps, then one row per
/// irreducible character.
pub fn table_text(t: &CharacterTable) -> String {
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    rows.push(("K".into(), t.classes().iter().map(|c| c.name.clone()).collect()));
    rows.push(("|K|".into(), t.classes().iter().map(|c| c.size.to_string()).collect()));
    rows.push((
        "|C_G(x_K)|".into(),
        t.classes().iter().map(|c| c.centralizer.to_string()).collect(),
    ));
    for (p, map) in t.power_maps() {
        rows.push((format!("{p}P"), map.iter().map(|&k| t.class(k).name.clone()).collect()));
    }
    let header = grid(&rows);
    let width = header.lines().map(str::len).max().unwrap_or(0);
    let body: Vec<(String, Vec<String>)> = t
        .irr()
        .iter()
        .enumerate()
        .map(|(i, row)| (format!("X.{}", i + 1), row.iter().map(cell).collect()))
        .collect();
    let mut all = rows;
    all.extend(body);
    let text = grid(&all);
    let mut lines: Vec<&str> = text.lines().collect();
    let rule = "-".repeat(width);
    let split = 3 + t.power_maps().len();
    lines.insert(split, &rule);
    format!("{} (order {})\n\n{}\n", t.name(), t.order(), lines.join("\n"))
}

pub fn int_matrix(m: &[Vec<u64>]) -> String {
    let rows: Vec<(String, Vec<String>)> = m
        .iter()
        .map(|r| (String::new(), r.iter().map(|&v| if v == 0 { ".".into() } else { v.to_string() }).collect()))
        .collect();
    grid(&rows)
}

pub fn one_based(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", s.join(", "))
}
