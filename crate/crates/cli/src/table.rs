//! The `table` command: regenerate the concluding tables and diff them
//! against the expected list in `assets/conclusion_table.txt`.

use anyhow::Context;
use chebknot::harmonic::build_diagram;
use chebknot::invariants::identify;
use chebknot::HarmonicKnotSpec;
use serde::Serialize;

use crate::Format;

const GOLDEN: &str = include_str!("../assets/conclusion_table.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub a: u32,
    pub b: u32,
    pub c: u64,
    pub name: String,
}

pub fn parse_golden(text: &str) -> anyhow::Result<Vec<Expected>> {
    text.lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, line)| {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 4 {
                anyhow::bail!("line {}: expected `a b c name`", i + 1);
            }
            let num = |s: &str| {
                s.parse::<u64>()
                    .with_context(|| format!("line {}: bad number {s:?}", i + 1))
            };
            Ok(Expected {
                a: num(f[0])? as u32,
                b: num(f[1])? as u32,
                c: num(f[2])?,
                name: f[3].to_string(),
            })
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct Row {
    pub a: u32,
    pub b: u32,
    pub c: u64,
    pub expected: String,
    pub got: String,
    pub matches: bool,
    pub matches_up_to_mirror: bool,
}

fn unbarred(name: &str) -> &str {
    name.strip_prefix('m').unwrap_or(name)
}

pub fn rows() -> anyhow::Result<Vec<Row>> {
    parse_golden(GOLDEN)?
        .into_iter()
        .map(|e| {
            let d = build_diagram(&HarmonicKnotSpec::new(e.a, e.b, e.c)?)?;
            let got = identify(&d)?.label();
            Ok(Row {
                matches: got == e.name,
                matches_up_to_mirror: unbarred(&got) == unbarred(&e.name),
                a: e.a,
                b: e.b,
                c: e.c,
                expected: e.name,
                got,
            })
        })
        .collect()
}

pub fn run(format: Format) -> anyhow::Result<String> {
    crate::only(format, &[Format::Text, Format::Json], "table")?;
    let rows = rows()?;
    if format == Format::Json {
        return crate::json(&rows);
    }
    let mut s = format!("{:<14} {:<10} {:<10} status\n", "knot", "expected", "got");
    for r in &rows {
        let status = match (r.matches, r.matches_up_to_mirror) {
            (true, _) => "ok",
            (false, true) => "mirror",
            (false, false) => "DIFF",
        };
        let spec = format!("H({},{},{})", r.a, r.b, r.c);
        s.push_str(&format!("{spec:<14} {:<10} {:<10} {status}\n", r.expected, r.got));
    }
    let exact = rows.iter().filter(|r| r.matches).count();
    let loose = rows.iter().filter(|r| r.matches_up_to_mirror).count();
    s.push_str(&format!(
        "{exact}/{n} rows match exactly, {loose}/{n} up to mirror image (\"m\" marks a mirror image)\n",
        n = rows.len()
    ));
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_file_parses() {
        let rows = parse_golden(GOLDEN).unwrap();
        assert_eq!(rows.len(), 22);
        assert_eq!(
            rows[0],
            Expected {
                a: 3,
                b: 4,
                c: 5,
                name: "m3_1".into()
            }
        );
    }

    #[test]
    fn malformed_lines_are_reported() {
        assert!(parse_golden("3 4 five m3_1").is_err());
        assert!(parse_golden("3 4 5").is_err());
        assert!(parse_golden("# only a comment\n").unwrap().is_empty());
    }
}
