//! Text form of extension-field elements: `x+y*a` with `a` denoting the
//! adjoined square root. Display uses symmetric integers; the parser
//! accepts both symmetric and canonical forms.

use crate::error::{Error, Result};
use crate::gf_ext::{ExtElement, ExtField};

/// Symmetric-form display string, e.g. `-3+2*a`, `14*a`, `1`, `0`, `-a`.
pub fn fmt_element(field: &ExtField, g: ExtElement) -> String {
    let base = field.base();
    let x = base.symmetric_int(g.x);
    let y = base.symmetric_int(g.y);
    let alpha_part = |y: i64| match y {
        1 => "a".to_string(),
        -1 => "-a".to_string(),
        _ => format!("{y}*a"),
    };
    match (x, y) {
        (_, 0) => format!("{x}"),
        (0, _) => alpha_part(y),
        (_, y) if y > 0 => format!("{x}+{}", alpha_part(y)),
        _ => format!("{x}{}", alpha_part(y)),
    }
}

fn parse_coeff(field: &ExtField, s: &str) -> Result<crate::gf_base::BaseElement> {
    let v: i64 = s
        .trim()
        .parse()
        .map_err(|_| Error::MalformedCache(format!("bad coefficient `{s}`")))?;
    let q = field.q() as i64;
    if field.base().e() == 1 {
        Ok(field.base().from_int(v))
    } else if (0..q).contains(&v) {
        Ok(field.base().element(v as u32))
    } else if (-q..0).contains(&v) {
        // inverse of symmetric_int, which shifts indices above (q-1)/2 down by q
        Ok(field.base().element((q + v) as u32))
    } else {
        Err(Error::MalformedCache(format!("coefficient out of range `{s}`")))
    }
}

/// Parses the output of [`fmt_element`], plus canonical-integer variants.
pub fn parse_element(field: &ExtField, s: &str) -> Result<ExtElement> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::MalformedCache(format!("cannot parse element `{s}`"));
    if compact.is_empty() {
        return Err(bad());
    }
    // terms start at signs preceded by a digit or `a`
    let bytes = compact.as_bytes();
    let mut terms: Vec<&str> = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        let c = bytes[i] as char;
        if (c == '+' || c == '-') && matches!(bytes[i - 1] as char, '0'..='9' | 'a') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    if terms.len() > 2 {
        return Err(bad());
    }
    let mut x = None;
    let mut y = None;
    for term in terms {
        if let Some(body) = term.strip_suffix('a') {
            if y.is_some() {
                return Err(bad());
            }
            let body = body.strip_suffix('*').unwrap_or(body);
            let coeff = match body {
                "" | "+" => parse_coeff(field, "1")?,
                "-" => parse_coeff(field, "-1")?,
                other => parse_coeff(field, other)?,
            };
            y = Some(coeff);
        } else {
            if x.is_some() {
                return Err(bad());
            }
            x = Some(parse_coeff(field, term)?);
        }
    }
    Ok(field.make(
        x.unwrap_or_else(|| field.base().zero()),
        y.unwrap_or_else(|| field.base().zero()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_examples() {
        let e = ExtField::from_q(29).unwrap();
        assert_eq!(fmt_element(&e, e.zero()), "0");
        assert_eq!(fmt_element(&e, e.one()), "1");
        assert_eq!(fmt_element(&e, e.alpha()), "a");
        assert_eq!(fmt_element(&e, e.neg(e.alpha())), "-a");
        assert_eq!(fmt_element(&e, e.from_ints(-3, 2)), "-3+2*a");
        assert_eq!(fmt_element(&e, e.from_ints(0, 14)), "14*a");
        assert_eq!(fmt_element(&e, e.from_ints(5, -12)), "5-12*a");
    }

    #[test]
    fn round_trip_all_elements() {
        for q in [9u64, 29] {
            let e = ExtField::from_q(q).unwrap();
            for g in e.elements() {
                let s = fmt_element(&e, g);
                assert_eq!(parse_element(&e, &s).unwrap(), g, "q={q} `{s}`");
            }
        }
    }

    #[test]
    fn parser_accepts_canonical_ints() {
        let e = ExtField::from_q(29).unwrap();
        assert_eq!(parse_element(&e, "26").unwrap(), e.from_ints(-3, 0));
        assert_eq!(parse_element(&e, "26+27*a").unwrap(), e.from_ints(-3, -2));
        assert!(parse_element(&e, "x+y").is_err());
    }
}
