use super::{Perm, PermGroup, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parse one permutation in 1-based cycle notation such as `(1,2,3)(4,5)`;
/// `()` is the identity.
pub fn parse_perm(text: &str, degree: usize) -> Result<Perm> {
    parse_perm_at(text, degree, 1, 1)
}

fn parse_perm_at(text: &str, degree: usize, line: usize, col0: usize) -> Result<Perm> {
    let bytes = text.as_bytes();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(perr(line, col0, "empty permutation"));
    }
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(perr(line, col0 + i, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == b')' && cycle.is_empty() {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(perr(line, col0 + i, "expected a point"));
            }
            let pt: usize = text[start..i]
                .parse()
                .map_err(|_| perr(line, col0 + start, "point out of range"))?;
            if pt == 0 || pt > degree {
                return Err(perr(line, col0 + start, format!("point {pt} outside 1..{degree}")));
            }
            cycle.push(pt - 1);
            skip_ws(&mut i);
            match bytes.get(i) {
                Some(b',') => i += 1,
                Some(b')') => {
                    i += 1;
                    break;
                }
                _ => return Err(perr(line, col0 + i, "expected ',' or ')'")),
            }
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        skip_ws(&mut i);
    }
    Perm::from_cycles(degree, &cycles).map_err(|e| perr(line, col0, e.to_string()))
}

/// Parse a group file into its degree and generators.
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Perm>)> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = content.find(trimmed).unwrap_or(0) + 1;
        match degree {
            None => {
                let rest = trimmed
                    .strip_prefix("degree")
                    .ok_or_else(|| perr(line_no, col, "expected `degree N`"))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| perr(line_no, col + 6, "invalid degree"))?;
                if n == 0 {
                    return Err(perr(line_no, col + 6, "degree must be positive"));
                }
                degree = Some(n);
            }
            Some(n) => gens.push(parse_perm_at(trimmed, n, line_no, col)?),
        }
    }
    let n = degree.ok_or_else(|| perr(1, 1, "missing `degree N` line"))?;
    if gens.is_empty() {
        gens.push(Perm::identity(n));
    }
    Ok((n, gens))
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    parse_group_with_cap(text, DEFAULT_MAX_ORDER)
}

pub fn parse_group_with_cap(text: &str, cap: usize) -> Result<PermGroup> {
    let (_, gens) = parse_generators(text)?;
    PermGroup::enumerate_with_cap(&gens, cap)
}

/// Write generators back in the group file format.
pub fn write_group(degree: usize, gens: &[Perm]) -> String {
    let mut s = format!("degree {degree}\n");
    for g in gens {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}
