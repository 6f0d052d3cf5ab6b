use std::fmt;
use std::str::FromStr;

pub const DEFAULT_DIGITS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Exact,
    Decimal(usize),
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Format::Exact),
            "json" => Ok(Format::Json),
            "decimal" => Ok(Format::Decimal(DEFAULT_DIGITS)),
            _ => s
                .strip_prefix("decimal:")
                .and_then(|k| k.parse().ok())
                .map(Format::Decimal)
                .ok_or_else(|| format!("unknown format {s:?}; use exact, decimal:K or json")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Format::Exact => f.write_str("exact"),
            Format::Decimal(k) => write!(f, "decimal:{k}"),
            Format::Json => f.write_str("json"),
        }
    }
}

/// An inclusive integer range: `7`, `4..9`, `4..=9` or a list `4,6,8`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRange(pub Vec<i64>);

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad range {s:?}; use N, A..B or A,B,C");
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        if let Some((lo, hi)) = s.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            return Ok(IntRange((int(lo)?..=int(hi)?).collect()));
        }
        s.split(',').map(int).collect::<Result<_, _>>().map(IntRange)
    }
}

/// Moves flags written after the trailing labels back in front of `--`,
/// so `sixj --n 6 -- 2 2 2 2 2 2 --format exact` parses.
pub fn reorder(args: Vec<String>) -> Vec<String> {
    let Some(pos) = args.iter().position(|a| a == "--") else {
        return args;
    };
    let tail = &args[pos + 1..];
    let split = tail.iter().position(|a| a.starts_with("--")).unwrap_or(tail.len());
    let mut out = args[..pos].to_vec();
    out.extend_from_slice(&tail[split..]);
    out.push("--".into());
    out.extend_from_slice(&tail[..split]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn formats() {
        assert_eq!("exact".parse(), Ok(Format::Exact));
        assert_eq!("decimal:7".parse(), Ok(Format::Decimal(7)));
        assert_eq!("json".parse(), Ok(Format::Json));
        assert!("decimal:x".parse::<Format>().is_err());
        assert_eq!(Format::Decimal(3).to_string().parse(), Ok(Format::Decimal(3)));
    }

    #[test]
    fn ranges() {
        assert_eq!("4..6".parse(), Ok(IntRange(vec![4, 5, 6])));
        assert_eq!("4..=6".parse(), Ok(IntRange(vec![4, 5, 6])));
        assert_eq!("4,6,8".parse(), Ok(IntRange(vec![4, 6, 8])));
        assert_eq!("5".parse(), Ok(IntRange(vec![5])));
        assert_eq!("9..4".parse(), Ok(IntRange(vec![])));
        assert!("a..b".parse::<IntRange>().is_err());
    }

    #[test]
    fn trailing_flags() {
        let got = reorder(strings(&["r", "sixj", "--n", "6", "--", "2", "2", "--format", "exact"]));
        assert_eq!(got, strings(&["r", "sixj", "--n", "6", "--format", "exact", "--", "2", "2"]));
        let plain = strings(&["r", "dim", "--n", "5"]);
        assert_eq!(reorder(plain.clone()), plain);
    }
}
