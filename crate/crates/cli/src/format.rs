//! Plain-text formats: numbers with 17 significant digits, `t y` datasets
//! and two-line Newton forms.

use anyhow::{bail, Context, Result};
use divdiff::NewtonPoly;

/// `x` with 17 significant digits, in the style of C's `%.17g`: fixed
/// notation for decimal exponents in `-5..17`, scientific otherwise, with
/// trailing zeros dropped.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..17).contains(&exp) {
        return format!(
            "{}e{}{:02}",
            trim_zeros(mantissa),
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        );
    }
    let decimals = (16 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn num_list(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")
}

fn parse_num(tok: &str, line: usize) -> Result<f64> {
    let v: f64 = tok
        .parse()
        .with_context(|| format!("line {line}: cannot parse number '{tok}'"))?;
    if !v.is_finite() {
        bail!("line {line}: non-finite number '{tok}'");
    }
    Ok(v)
}

/// Lines with comments stripped, numbered from 1, blank ones skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// `(t, y)` records of a dataset file, in file order.
pub fn parse_dataset(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut records = Vec::new();
    for (line, content) in content_lines(text) {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let [t, y] = toks[..] else {
            bail!("line {line}: expected two numbers 't y', found {}", toks.len());
        };
        records.push((parse_num(t, line)?, parse_num(y, line)?));
    }
    if records.is_empty() {
        bail!("dataset has no records");
    }
    Ok(records)
}

pub fn format_dataset(records: &[(f64, f64)]) -> String {
    records
        .iter()
        .map(|&(t, y)| format!("{} {}\n", num(t), num(y)))
        .collect()
}

pub fn parse_newton_form(text: &str) -> Result<NewtonPoly> {
    let mut centers = None;
    let mut coeffs = None;
    for (line, content) in content_lines(text) {
        let (key, rest) = content
            .split_once(':')
            .with_context(|| format!("line {line}: expected 'key: values'"))?;
        let values = rest
            .split_whitespace()
            .map(|tok| parse_num(tok, line))
            .collect::<Result<Vec<f64>>>()?;
        let slot = match key.trim() {
            "centers" => &mut centers,
            "coeffs" => &mut coeffs,
            other => bail!("line {line}: unknown key '{other}'"),
        };
        if slot.replace(values).is_some() {
            bail!("line {line}: duplicate '{}' line", key.trim());
        }
    }
    let centers = centers.context("missing 'centers:' line")?;
    let coeffs = coeffs.context("missing 'coeffs:' line")?;
    if coeffs.len() != centers.len() + 1 {
        bail!(
            "coefficient count {} must be one more than center count {}",
            coeffs.len(),
            centers.len()
        );
    }
    Ok(NewtonPoly::new(centers, coeffs)?)
}

pub fn format_newton_form(p: &NewtonPoly) -> String {
    let line = |key: &str, xs: &[f64]| {
        if xs.is_empty() {
            format!("{key}:\n")
        } else {
            format!("{key}: {}\n", num_list(xs))
        }
    };
    line("centers", p.centers()) + &line("coeffs", p.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(num(6.0), "6");
        assert_eq!(num(-2.5), "-2.5");
        assert_eq!(num(0.1), "0.10000000000000001");
        assert_eq!(num(1.0 / 3.0), "0.33333333333333331");
        assert_eq!(num(1e-7), "9.9999999999999995e-08");
        assert_eq!(num(1e20), "1e+20");
        assert_eq!(num(123456.0), "123456");
        assert_eq!(num(0.0), "0");
        for x in [0.1, 1.0 / 3.0, -7.25e-9, 6.02e23, f64::MIN_POSITIVE, 123.456] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn dataset_round_trip() {
        let text = "# x^3\n1 1\n2 8   # two\n\n3 27\n0.1 -1e-3\n";
        let records = parse_dataset(text).unwrap();
        assert_eq!(records, vec![(1.0, 1.0), (2.0, 8.0), (3.0, 27.0), (0.1, -1e-3)]);
        assert_eq!(parse_dataset(&format_dataset(&records)).unwrap(), records);
        assert!(parse_dataset("1 2 3\n").is_err());
        assert!(parse_dataset("1 x\n").is_err());
        assert!(parse_dataset("# nothing\n").is_err());
    }

    #[test]
    fn newton_form_round_trip() {
        let p = parse_newton_form("centers: 0\ncoeffs: 1 2\n").unwrap();
        assert_eq!((p.centers(), p.coeffs()), (&[0.0][..], &[1.0, 2.0][..]));
        assert_eq!(format_newton_form(&p), "centers: 0\ncoeffs: 1 2\n");
        let c = parse_newton_form("centers:\ncoeffs: 5\n").unwrap();
        assert_eq!(format_newton_form(&c), "centers:\ncoeffs: 5\n");
        assert!(parse_newton_form("centers: 1 2\ncoeffs: 1 2\n").is_err());
        assert!(parse_newton_form("coeffs: 1\n").is_err());
    }
}
