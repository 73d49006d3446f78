//! Plain-text poset documents.
//!
//! ```text
//! # comments start with '#'
//! poset 5
//! cover 0 2
//! cover 0 3
//! cover 1 3
//! label 0 a
//! ```
//!
//! `cover i j` states `i < j` (0-based). Redundant and transitive pairs are
//! accepted and canonicalized; [`format_poset`] writes only the cover pairs,
//! sorted, followed by the labels.

use crate::error::{Error, Result};
use crate::poset::Poset;

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut size: Option<usize> = None;
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |message: String| Error::Syntax {
            line: line_no,
            message,
        };
        let (directive, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let index = |token: Option<&str>| -> Result<usize> {
            let token =
                token.ok_or_else(|| syntax(format!("`{directive}` is missing an index")))?;
            token
                .parse()
                .map_err(|_| syntax(format!("invalid index {token:?}")))
        };
        match directive {
            "poset" => {
                if size.is_some() {
                    return Err(syntax("duplicate `poset` header".into()));
                }
                let mut tokens = rest.split_whitespace();
                let n = index(tokens.next())?;
                if tokens.next().is_some() {
                    return Err(syntax("unexpected tokens after `poset <n>`".into()));
                }
                size = Some(n);
            }
            _ if size.is_none() => {
                return Err(syntax(format!("expected `poset <n>` before `{directive}`")));
            }
            "cover" => {
                let mut tokens = rest.split_whitespace();
                let x = index(tokens.next())?;
                let y = index(tokens.next())?;
                if tokens.next().is_some() {
                    return Err(syntax("unexpected tokens after `cover <i> <j>`".into()));
                }
                pairs.push((x, y));
            }
            "label" => {
                let (token, name) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let x = index(Some(token).filter(|t| !t.is_empty()))?;
                let name = name.trim();
                if name.is_empty() {
                    return Err(syntax("`label` needs a name".into()));
                }
                labels.push((x, name.to_string()));
            }
            other => return Err(syntax(format!("unknown directive `{other}`"))),
        }
    }
    let n = size.ok_or(Error::Syntax {
        line: last_line,
        message: "missing `poset <n>` header".into(),
    })?;
    let mut poset = Poset::new(n, &pairs)?;
    for (x, name) in labels {
        poset.set_label(x, name)?;
    }
    Ok(poset)
}

/// Canonical text: header, sorted cover lines, then labels.
pub fn format_poset(poset: &Poset) -> String {
    let mut out = format!("poset {}\n", poset.len());
    for (x, y) in poset.cover_pairs() {
        out.push_str(&format!("cover {x} {y}\n"));
    }
    for x in 0..poset.len() {
        if let Some(label) = poset.label(x) {
            let clean = label.split_whitespace().collect::<Vec<_>>().join(" ");
            out.push_str(&format!("label {x} {clean}\n"));
        }
    }
    out
}

/// [`format_poset`] preceded by a `#` comment block.
pub fn format_poset_with_comment(poset: &Poset, comment: &str) -> String {
    let mut out = String::new();
    for line in comment.lines() {
        if line.is_empty() {
            out.push_str("#\n");
        } else {
            out.push_str(&format!("# {line}\n"));
        }
    }
    out.push_str(&format_poset(poset));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const N_PLUS_POINT: &str = "poset 5\ncover 0 2\ncover 0 3\ncover 1 3\n";

    #[test]
    fn parses_the_disjoint_sum_example() {
        let p = parse_poset(N_PLUS_POINT).unwrap();
        assert_eq!(p, Poset::new(5, &[(0, 2), (0, 3), (1, 3)]).unwrap());
        assert_eq!(format_poset(&p), N_PLUS_POINT);
    }

    #[test]
    fn canonicalizes() {
        assert_eq!(parse_poset("poset 2\n").unwrap(), Poset::antichain(2));
        assert_eq!(format_poset(&Poset::antichain(2)), "poset 2\n");
        let messy = "# N\n\n  poset 4\ncover 2 3\ncover 0 1\ncover 2 1\ncover 2 1\n";
        assert_eq!(
            format_poset(&parse_poset(messy).unwrap()),
            "poset 4\ncover 0 1\ncover 2 1\ncover 2 3\n"
        );
        let chain = parse_poset("poset 3\ncover 0 1\ncover 1 2\ncover 0 2\n").unwrap();
        assert_eq!(format_poset(&chain), "poset 3\ncover 0 1\ncover 1 2\n");
    }

    #[test]
    fn labels_round_trip() {
        let text = "poset 3\ncover 0 2\nlabel 0 a\nlabel 2 top element\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(p.label(2), Some("top element"));
        assert_eq!(p.label(1), None);
        assert_eq!(format_poset(&p), text);
    }

    #[test]
    fn reports_errors() {
        assert_eq!(
            parse_poset("poset 2\ncover 0 1\ncover 1 0\n"),
            Err(Error::CycleDetected(0))
        );
        assert!(matches!(
            parse_poset("poset 2\ncover 0 5\n"),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_poset("poset 2\nlabel 9 x\n"),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_poset("cover 0 1\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_poset("poset 2\nedge 0 1\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("poset 2\ncover 0\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("poset x\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_poset("# nothing\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_poset("poset 2\nposet 2\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_poset("poset 2\nlabel 1\n"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert_eq!(parse_poset("poset 0\n"), Err(Error::Empty));
    }

    #[test]
    fn comment_block() {
        let text = format_poset_with_comment(&Poset::chain(2), "generated\n\nseed 3");
        assert_eq!(text, "# generated\n#\n# seed 3\nposet 2\ncover 0 1\n");
        assert_eq!(parse_poset(&text).unwrap(), Poset::chain(2));
    }
}
