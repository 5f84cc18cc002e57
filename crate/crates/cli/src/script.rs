//! Line-oriented input files. Blank lines and text after `#` are ignored.

use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Pair(usize, usize),
    Push(u8),
    Pop,
    Sups(usize, usize),
    Sub(usize, u8),
    Query(usize, usize),
    Close,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Line {
    pub number: usize,
    pub op: Op,
}

pub fn read(path: &Path) -> Result<String> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
    } else {
        s = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(s)
}

/// Non-empty lines with comments removed, numbered from 1.
fn content(doc: &str) -> impl Iterator<Item = (usize, &str)> {
    doc.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Sequence records of a FASTA document, concatenated.
fn fasta(doc: &str) -> Vec<u8> {
    doc.lines()
        .filter(|l| !l.starts_with('>') && !l.starts_with(';'))
        .flat_map(|l| l.bytes().filter(|b| !b.is_ascii_whitespace()))
        .collect()
}

/// The subject on the first content line, and that line's number. The
/// subject is either literal printable ASCII or `@path` to a plain or FASTA
/// file, resolved relative to the script.
pub fn subject(doc: &str, script: &Path) -> Result<(Vec<u8>, usize)> {
    let Some((number, first)) = content(doc).next() else {
        bail!("missing subject line");
    };
    if let Some(path) = first.strip_prefix('@') {
        let mut full = PathBuf::from(path);
        if full.is_relative() {
            if let Some(dir) = script.parent() {
                full = dir.join(full);
            }
        }
        let raw = std::fs::read(&full).with_context(|| format!("reading {}", full.display()))?;
        let bytes = if raw.first() == Some(&b'>') {
            fasta(&String::from_utf8_lossy(&raw))
        } else {
            raw.into_iter().filter(|b| !b.is_ascii_whitespace()).collect()
        };
        if bytes.is_empty() {
            bail!("line {number}: {} holds no characters", full.display());
        }
        return Ok((bytes, number));
    }
    if first.bytes().any(|b| !b.is_ascii_graphic()) {
        bail!("line {number}: subject must be printable ASCII without spaces; use @path for other input");
    }
    Ok((first.as_bytes().to_vec(), number))
}

fn number(word: Option<&str>, line: usize) -> Result<usize> {
    let word = word.with_context(|| format!("line {line}: missing number"))?;
    let n: usize = word.parse().with_context(|| format!("line {line}: bad number {word:?}"))?;
    if n == 0 {
        bail!("line {line}: positions start at 1");
    }
    Ok(n)
}

fn character(word: Option<&str>, line: usize) -> Result<u8> {
    match word.map(str::as_bytes) {
        Some([c]) if c.is_ascii_graphic() => Ok(*c),
        _ => bail!("line {line}: expected one printable character"),
    }
}

/// Parses the content lines of `doc` after line `skip`.
pub fn ops(doc: &str, skip: usize) -> Result<Vec<Line>> {
    content(doc)
        .filter(|&(number, _)| number > skip)
        .map(|(number, text)| {
            let mut words = text.split_whitespace();
            let head = words.next().unwrap_or("");
            let op = match head {
                "push" => Op::Push(character(words.next(), number)?),
                "pop" => Op::Pop,
                "sups" => Op::Sups(self::number(words.next(), number)?, self::number(words.next(), number)?),
                "sub" => Op::Sub(self::number(words.next(), number)?, character(words.next(), number)?),
                "query" => Op::Query(self::number(words.next(), number)?, self::number(words.next(), number)?),
                "close" => Op::Close,
                _ => {
                    let p = self::number(Some(head), number)?;
                    Op::Pair(p, self::number(words.next(), number)?)
                }
            };
            if let Some(extra) = words.next() {
                bail!("line {number}: unexpected {extra:?}");
            }
            Ok(Line { number, op })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ops() {
        let doc = "# header\npush a\npop  # drop\n\nsups 1 2\n3 4\nsub 2 x\nclose\n";
        let ops: Vec<Op> = ops(doc, 0).unwrap().into_iter().map(|l| l.op).collect();
        assert_eq!(
            ops,
            vec![Op::Push(b'a'), Op::Pop, Op::Sups(1, 2), Op::Pair(3, 4), Op::Sub(2, b'x'), Op::Close]
        );
        assert_eq!(super::ops("push", 0).unwrap_err().to_string(), "line 1: expected one printable character");
        assert!(super::ops("1 x", 0).is_err());
        assert!(super::ops("0 1", 0).is_err());
        assert!(super::ops("pop 3", 0).is_err());
    }

    #[test]
    fn subject_line() {
        let doc = "# c\nabba\n1 2\n";
        let (s, skip) = subject(doc, Path::new("x")).unwrap();
        assert_eq!(s, b"abba");
        assert_eq!(ops(doc, skip).unwrap(), vec![Line { number: 3, op: Op::Pair(1, 2) }]);
        assert!(subject("a b\n", Path::new("x")).is_err());
        assert_eq!(fasta(">id\nAC\nGT\n"), b"ACGT");
    }
}
