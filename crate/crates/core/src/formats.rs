//! Text formats for functions, bijections, schedules, and pairs.
//!
//! Function files: a `n=<int>` header, then one `<bits> -> <bits>` row per
//! input state, `#` to end of line is comment, rows in any order, all `2^n`
//! inputs required. Bijection files use the identical syntax and are
//! additionally validated as permutations. Schedule files list masks one per
//! line, optionally preceded by a strictly increasing decimal instant.

use crate::bijection::Bijection;
use crate::error::{Error, Result};
use crate::orbits::{SchedulePrefix, TimedSchedule};
use crate::state::State;
use crate::table::TruthTable;

/// A schedule file is either a bare mask-sequence prefix or a timed one.
#[derive(Clone, PartialEq, Debug)]
pub enum ScheduleFile {
    Prefix(SchedulePrefix),
    Timed(TimedSchedule),
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            None
        } else {
            Some((i + 1, trimmed))
        }
    })
}

fn parse_header(line: usize, text: &str) -> Result<usize> {
    let rest = text
        .strip_prefix("n")
        .map(str::trim_start)
        .and_then(|s| s.strip_prefix('='))
        .ok_or_else(|| Error::BadSyntax {
            line,
            msg: format!("expected `n=<int>` header, got `{text}`"),
        })?;
    let n: usize = rest.trim().parse().map_err(|_| Error::BadSyntax {
        line,
        msg: format!("bad dimension `{}`", rest.trim()),
    })?;
    if n == 0 || n > crate::MAX_DIM {
        return Err(Error::BadSyntax {
            line,
            msg: format!("dimension {n} out of range 1..={}", crate::MAX_DIM),
        });
    }
    Ok(n)
}

fn parse_bits(line: usize, n: usize, text: &str) -> Result<State> {
    if text.chars().any(|c| c != '0' && c != '1') {
        return Err(Error::BadSyntax {
            line,
            msg: format!("`{text}` is not a bit string"),
        });
    }
    if text.len() != n {
        return Err(Error::RowDimension {
            line,
            expected: n,
            got: text.len(),
        });
    }
    let bits: Vec<bool> = text.chars().map(|c| c == '1').collect();
    State::from_bits(&bits)
}

/// Parses a function file into a truth table.
pub fn parse_function(text: &str) -> Result<TruthTable> {
    let mut lines = significant_lines(text);
    let (line, header) = lines.next().ok_or(Error::BadSyntax {
        line: 1,
        msg: "empty file".into(),
    })?;
    let n = parse_header(line, header)?;
    let size = 1usize << n;
    let mut rows: Vec<Option<u16>> = vec![None; size];
    for (line, row) in lines {
        let (lhs, rhs) = row.split_once("->").ok_or_else(|| Error::BadSyntax {
            line,
            msg: format!("expected `<bits> -> <bits>`, got `{row}`"),
        })?;
        let input = parse_bits(line, n, lhs.trim())?;
        let output = parse_bits(line, n, rhs.trim())?;
        if rows[input.index()].is_some() {
            return Err(Error::DuplicateRow {
                line,
                input: input.bit_string(),
            });
        }
        rows[input.index()] = Some(output.index() as u16);
    }
    let mut table = Vec::with_capacity(size);
    for (i, row) in rows.into_iter().enumerate() {
        match row {
            Some(out) => table.push(out),
            None => {
                return Err(Error::MissingRow {
                    input: State::new(n, i)?.bit_string(),
                })
            }
        }
    }
    TruthTable::from_rows(n, table)
}

/// Parses a bijection file: function-file syntax plus a permutation check.
pub fn parse_bijection(text: &str) -> Result<Bijection> {
    Bijection::from_table(&parse_function(text)?)
}

/// Canonical text form; `parse_function` of the output reproduces the table.
pub fn serialize_function(table: &TruthTable) -> String {
    let mut out = format!("n={}\n", table.dim());
    for (input, output) in table.entries() {
        out.push_str(&format!("{input} -> {output}\n"));
    }
    out
}

pub fn serialize_bijection(b: &Bijection) -> String {
    serialize_function(&b.as_table())
}

/// Parses a schedule file. Lines after the header carry either a bare mask
/// (`<bits>`) or an instant and a mask (`<t> <bits>`); the two styles do not
/// mix.
pub fn parse_schedule(text: &str) -> Result<ScheduleFile> {
    let mut lines = significant_lines(text);
    let (line, header) = lines.next().ok_or(Error::BadSyntax {
        line: 1,
        msg: "empty file".into(),
    })?;
    let n = parse_header(line, header)?;
    let mut steps: Vec<State> = Vec::new();
    let mut times: Vec<f64> = Vec::new();
    let mut timed: Option<bool> = None;
    for (line, row) in lines {
        let fields: Vec<&str> = row.split_whitespace().collect();
        let this_timed = match fields.len() {
            1 => false,
            2 => true,
            _ => {
                return Err(Error::BadSyntax {
                    line,
                    msg: format!("expected `<bits>` or `<t> <bits>`, got `{row}`"),
                })
            }
        };
        if *timed.get_or_insert(this_timed) != this_timed {
            return Err(Error::BadSyntax {
                line,
                msg: "cannot mix timed and untimed schedule lines".into(),
            });
        }
        if this_timed {
            let t: f64 = fields[0].parse().map_err(|_| Error::BadSyntax {
                line,
                msg: format!("bad instant `{}`", fields[0]),
            })?;
            if let Some(&last) = times.last() {
                if t <= last {
                    return Err(Error::BadSyntax {
                        line,
                        msg: format!("instant {t} does not exceed its predecessor {last}"),
                    });
                }
            }
            times.push(t);
            steps.push(parse_bits(line, n, fields[1])?);
        } else {
            steps.push(parse_bits(line, n, fields[0])?);
        }
    }
    let prefix = SchedulePrefix::new(n, steps)?;
    if timed == Some(true) {
        Ok(ScheduleFile::Timed(TimedSchedule::new(prefix, times)?))
    } else {
        Ok(ScheduleFile::Prefix(prefix))
    }
}

/// Parses a pair file: a `g:` block then a `g':` block, each block a
/// complete bijection file.
pub fn parse_pair(text: &str) -> Result<(Bijection, Bijection)> {
    let mut g_block = String::new();
    let mut gp_block = String::new();
    let mut target: Option<bool> = None;
    for (line, row) in significant_lines(text) {
        match row {
            "g:" => {
                if target.is_some() {
                    return Err(Error::BadSyntax {
                        line,
                        msg: "duplicate `g:` block".into(),
                    });
                }
                target = Some(false);
            }
            "g':" => {
                if target == Some(true) {
                    return Err(Error::BadSyntax {
                        line,
                        msg: "duplicate `g':` block".into(),
                    });
                }
                target = Some(true);
            }
            _ => match target {
                Some(false) => {
                    g_block.push_str(row);
                    g_block.push('\n');
                }
                Some(true) => {
                    gp_block.push_str(row);
                    gp_block.push('\n');
                }
                None => {
                    return Err(Error::BadSyntax {
                        line,
                        msg: format!("expected `g:` before `{row}`"),
                    })
                }
            },
        }
    }
    if g_block.is_empty() || gp_block.is_empty() {
        return Err(Error::BadSyntax {
            line: 1,
            msg: "pair file needs both a `g:` and a `g':` block".into(),
        });
    }
    let g = parse_bijection(&g_block)?;
    let gp = parse_bijection(&gp_block)?;
    if g.dim() != gp.dim() {
        return Err(Error::DimensionMismatch {
            left: g.dim(),
            right: gp.dim(),
        });
    }
    Ok((g, gp))
}
