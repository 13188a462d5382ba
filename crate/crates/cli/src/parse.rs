//! Argument grammars that clap does not cover: classes, tolerances, ranges.

use ffl_core::{FiberedClass, IjkClass, Sign};
use num_rational::BigRational;

use crate::error::CliError;

/// A class as typed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassArg {
    Xyz(FiberedClass),
    Ijk(IjkClass),
}

impl ClassArg {
    pub fn xyz(&self) -> FiberedClass {
        match self {
            ClassArg::Xyz(a) => *a,
            ClassArg::Ijk(c) => c.to_xyz(),
        }
    }

    /// `(i,j,k)±` form, swapping `x` and `y` first when needed.
    pub fn ijk(&self) -> ffl_core::Result<IjkClass> {
        match self {
            ClassArg::Ijk(c) => Ok(*c),
            ClassArg::Xyz(a) => a.canonical().to_ijk(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Comma,
    Colon,
    Tag(String),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize, String)>, CliError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut n = 0;
    let mut after_colon = false;
    while n < chars.len() {
        let (off, c) = chars[n];
        if c.is_whitespace() {
            n += 1;
            continue;
        }
        if after_colon {
            let rest: String = chars[n..]
                .iter()
                .map(|&(_, c)| c)
                .filter(|c| !c.is_whitespace())
                .collect();
            out.push((Tok::Tag(rest.clone()), off, rest));
            break;
        }
        match c {
            ',' => {
                out.push((Tok::Comma, off, ",".into()));
                n += 1;
            }
            ':' => {
                out.push((Tok::Colon, off, ":".into()));
                after_colon = true;
                n += 1;
            }
            _ if c == '-' || c == '+' || c.is_ascii_digit() => {
                let start = n;
                n += 1;
                while n < chars.len() && chars[n].1.is_ascii_digit() {
                    n += 1;
                }
                let word: String = chars[start..n].iter().map(|&(_, c)| c).collect();
                let v = word
                    .parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("bad integer {word:?} at offset {off}")))?;
                out.push((Tok::Int(v), off, word));
            }
            _ => {
                let start = n;
                while n < chars.len() && !matches!(chars[n].1, ',' | ':') && !chars[n].1.is_whitespace() {
                    n += 1;
                }
                let word: String = chars[start..n].iter().map(|&(_, c)| c).collect();
                return Err(CliError::Usage(format!("unexpected token {word:?} at offset {off}")));
            }
        }
    }
    Ok(out)
}

/// Splits `"a,b,c"` into integers, reporting the first bad token.
fn integers(toks: &[(Tok, usize, String)], text: &str) -> Result<Vec<(i64, usize, String)>, CliError> {
    let mut values = Vec::new();
    for (n, (t, off, word)) in toks.iter().enumerate() {
        let want_int = n % 2 == 0;
        match (t, want_int) {
            (Tok::Int(v), true) => values.push((*v, *off, word.clone())),
            (Tok::Comma, false) => {}
            _ => {
                let expected = if want_int { "an integer" } else { "','" };
                return Err(CliError::Usage(format!(
                    "expected {expected}, found {word:?} at offset {off}"
                )));
            }
        }
    }
    if toks.last().is_some_and(|t| t.0 == Tok::Comma) {
        return Err(CliError::Usage(format!("class {text:?} ends with ','")));
    }
    Ok(values)
}

/// Parses `x,y,z`, `i,j,k:+`, `i,j,k:-` or `j,k:0`.
pub fn parse_class(text: &str) -> Result<ClassArg, CliError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(CliError::Usage("empty class".into()));
    }
    let colon = toks.iter().position(|t| t.0 == Tok::Colon);
    let (body, tag) = match colon {
        Some(p) => match toks.get(p + 1) {
            Some((Tok::Tag(tag), off, _)) => (&toks[..p], Some((tag.as_str(), *off))),
            _ => {
                return Err(CliError::Usage(format!(
                    "missing sign tag after ':' at offset {}",
                    toks[p].1
                )))
            }
        },
        None => (&toks[..], None),
    };
    let values = integers(body, text)?;
    let arity = |n: usize| -> Result<(), CliError> {
        if values.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "class {text:?} needs {n} integers, found {}",
                values.len()
            )))
        }
    };
    let nonnegative = |values: &[(i64, usize, String)]| -> Result<(), CliError> {
        match values.iter().find(|v| v.0 < 0) {
            Some((_, off, word)) => Err(CliError::Usage(format!(
                "negative coordinate {word:?} at offset {off}; only the x,y,z form allows signs"
            ))),
            None => Ok(()),
        }
    };
    match tag {
        None => {
            arity(3)?;
            let (x, y, z) = (values[0].0, values[1].0, values[2].0);
            Ok(ClassArg::Xyz(FiberedClass::new(x, y, z)?))
        }
        Some((t @ ("+" | "-"), _)) => {
            arity(3)?;
            nonnegative(&values)?;
            let sign = if t == "+" { Sign::Plus } else { Sign::Minus };
            Ok(ClassArg::Ijk(IjkClass::new(
                values[0].0,
                values[1].0,
                values[2].0,
                sign,
            )?))
        }
        Some(("0", _)) => {
            arity(2)?;
            nonnegative(&values)?;
            Ok(ClassArg::Ijk(IjkClass::zero(values[0].0, values[1].0)?))
        }
        Some((other, off)) => Err(CliError::Usage(format!(
            "unknown tag {other:?} at offset {off}; expected '+', '-' or '0'"
        ))),
    }
}

/// Three integers without domain checks, for `--family` parameters.
pub fn parse_triple(text: &str) -> Result<(i64, i64, i64), CliError> {
    let toks = tokenize(text)?;
    let values = integers(&toks, text)?;
    match values.as_slice() {
        [a, b, c] => Ok((a.0, b.0, c.0)),
        _ => Err(CliError::Usage(format!("expected i,j,k, found {text:?}"))),
    }
}

/// A tolerance given as a decimal (`1e-8`) or a fraction (`1/1000`).
#[derive(Clone, Debug)]
pub struct ToleranceArg {
    pub value: f64,
    pub tolerance: ffl_core::Tolerance,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

impl Default for ToleranceArg {
    fn default() -> Self {
        parse_tolerance("1e-12").expect("valid default")
    }
}

pub fn parse_tolerance(text: &str) -> Result<ToleranceArg, CliError> {
    let t = text.trim();
    let bad = || {
        CliError::Usage(format!(
            "bad tolerance {t:?}; expected a positive number such as 1e-8 or 1/1000"
        ))
    };
    let exact = match t.parse::<BigRational>() {
        Ok(r) => r,
        Err(_) => {
            let v: f64 = t.parse().map_err(|_| bad())?;
            BigRational::from_float(v).ok_or_else(bad)?
        }
    };
    let value = num_traits_f64(&exact);
    let tolerance = ffl_core::Tolerance::new(exact).map_err(|_| bad())?;
    Ok(ToleranceArg { value, tolerance })
}

fn num_traits_f64(r: &BigRational) -> f64 {
    <BigRational as ffl_core::Scalar>::as_f64(r)
}

/// `a..b` (inclusive) or a single value.
pub fn parse_range(text: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("bad range {text:?}; expected N or A..B"));
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    match t.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            if a > b {
                return Err(bad());
            }
            Ok((a, b))
        }
        None => {
            let v = t.parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}
