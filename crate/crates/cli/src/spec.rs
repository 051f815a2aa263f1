//! Parsers for die and pair arguments.

use diceways_core::MarkedDie;

/// `lo..hi` (inclusive) or a comma list of marks; a single number is a
/// one-faced die.
pub fn parse_die(s: &str) -> Result<MarkedDie, String> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = parse_mark(lo)?;
        let hi = parse_mark(hi.strip_prefix('=').unwrap_or(hi))?;
        return MarkedDie::range(lo, hi).map_err(|e| e.to_string());
    }
    let marks = s
        .split(',')
        .map(parse_mark)
        .collect::<Result<Vec<_>, _>>()?;
    MarkedDie::new(marks).map_err(|e| e.to_string())
}

fn parse_mark(s: &str) -> Result<u64, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a nonnegative integer face mark"))
}

/// `a:b` with both sides nonnegative integers.
pub fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("`{s}` should look like a:b"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("`{t}` is not a nonnegative integer"))
    };
    Ok((num(a)?, num(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn die_specs() {
        assert_eq!(parse_die("1..6").unwrap().marks(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(parse_die("1..=3").unwrap().marks(), &[1, 2, 3]);
        assert_eq!(parse_die("2,4,4").unwrap().marks(), &[2, 4, 4]);
        assert_eq!(parse_die("5").unwrap().marks(), &[5]);
        assert!(parse_die("6..1").is_err());
        assert!(parse_die("").is_err());
        assert!(parse_die("1,,2").is_err());
        assert!(parse_die("-1").is_err());
        assert!(parse_die("a..b").is_err());
    }

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("3:1").unwrap(), (3, 1));
        assert!(parse_pair("3").is_err());
        assert!(parse_pair("3:-1").is_err());
    }
}
