//! Burmeister CXT:
//!
//! ```text
//! B
//!
//! <object count>
//! <attribute count>
//!
//! <object names, one per line>
//! <attribute names, one per line>
//! <one row of X/. per object>
//! ```

use super::FormalContext;
use crate::error::{Error, Result};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, line)) => {
                self.last = i + 1;
                Ok((i + 1, line.trim_end_matches(['\r', ' ', '\t'])))
            }
            None => Err(Error::Cxt {
                line: self.last + 1,
                message: format!("unexpected end of input, expected {what}"),
            }),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Cxt {
        line,
        message: message.into(),
    }
}

pub fn parse_cxt(text: &str) -> Result<FormalContext> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };

    let (n, header) = lines.next("header `B`")?;
    if header != "B" {
        return Err(err(n, format!("expected header `B`, found {header:?}")));
    }
    let (n, blank) = lines.next("blank line")?;
    if !blank.is_empty() {
        return Err(err(n, "expected blank line after header"));
    }
    let num_objects = parse_count(&mut lines, "object count")?;
    let num_attributes = parse_count(&mut lines, "attribute count")?;
    let (n, blank) = lines.next("blank line")?;
    if !blank.is_empty() {
        return Err(err(n, "expected blank line after counts"));
    }

    let mut objects = Vec::with_capacity(num_objects);
    for _ in 0..num_objects {
        objects.push(lines.next("object name")?.1.to_string());
    }
    let mut attributes = Vec::with_capacity(num_attributes);
    for _ in 0..num_attributes {
        attributes.push(lines.next("attribute name")?.1.to_string());
    }

    let mut incidence = Vec::new();
    for g in 0..num_objects {
        let (n, row) = lines.next("incidence row")?;
        let width = row.chars().count();
        if width != num_attributes {
            return Err(err(
                n,
                format!("row has {width} columns, expected {num_attributes}"),
            ));
        }
        for (m, ch) in row.chars().enumerate() {
            match ch {
                'X' => incidence.push((g, m)),
                '.' => {}
                other => return Err(err(n, format!("illegal character {other:?} in row"))),
            }
        }
    }

    for (i, rest) in lines.inner.by_ref() {
        if !rest.trim().is_empty() {
            return Err(err(i + 1, "trailing content after incidence rows"));
        }
    }

    FormalContext::new(objects, attributes, incidence).map_err(|e| match e {
        Error::Document(msg) => err(0, msg),
        other => other,
    })
}

fn parse_count(lines: &mut Lines<'_>, what: &str) -> Result<usize> {
    let (n, line) = lines.next(what)?;
    line.trim()
        .parse()
        .map_err(|_| err(n, format!("expected {what}, found {line:?}")))
}

pub(super) fn write_cxt(ctx: &FormalContext) -> String {
    let mut out = String::from("B\n\n");
    out.push_str(&format!(
        "{}\n{}\n\n",
        ctx.num_objects(),
        ctx.num_attributes()
    ));
    for name in ctx.objects() {
        out.push_str(name);
        out.push('\n');
    }
    for name in ctx.attributes() {
        out.push_str(name);
        out.push('\n');
    }
    for g in 0..ctx.num_objects() {
        for m in 0..ctx.num_attributes() {
            out.push(if ctx.has(g, m) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const MUSIC: &str = "B\n\n3\n4\n\na\nb\nc\nw\nx\ny\nz\nXX..\n.XX.\n..XX\n";

    #[test]
    fn parses_music_context() {
        let ctx = parse_cxt(MUSIC).unwrap();
        assert_eq!(ctx.objects(), ["a", "b", "c"]);
        assert_eq!(ctx.attributes(), ["w", "x", "y", "z"]);
        assert_eq!(ctx.incidence().count(), 6);
        assert!(ctx.has(0, 0) && ctx.has(0, 1) && ctx.has(2, 3));
        assert!(!ctx.has(0, 2));
    }

    #[test]
    fn parses_empty_context() {
        let ctx = parse_cxt("B\n\n0\n0\n\n").unwrap();
        assert_eq!(ctx.num_objects(), 0);
        assert_eq!(ctx.num_attributes(), 0);
    }

    #[test]
    fn tolerates_crlf() {
        let ctx = parse_cxt(&MUSIC.replace('\n', "\r\n")).unwrap();
        assert_eq!(ctx.incidence().count(), 6);
    }

    #[test]
    fn short_row_reports_its_line() {
        let text = "B\n\n3\n4\n\na\nb\nc\nw\nx\ny\nz\nXX..\n.XX\n..XX\n";
        match parse_cxt(text) {
            Err(Error::Cxt { line, .. }) => assert_eq!(line, 14),
            other => panic!("expected cxt error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        let cases = [
            ("A\n\n0\n0\n\n", 1),
            ("B\nname\n0\n0\n\n", 2),
            ("B\n\nthree\n0\n\n", 3),
            ("B\n\n1\n1\n\na\nx\nQ\n", 8),
            ("B\n\n2\n1\n\na\nb\nx\nX\n", 10),
            ("B\n\n1\n1\n\na\nx\nX\nextra\n", 9),
        ];
        for (text, expected_line) in cases {
            match parse_cxt(text) {
                Err(Error::Cxt { line, .. }) => assert_eq!(line, expected_line, "{text:?}"),
                other => panic!("expected cxt error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn serializes_bit_exact() {
        let ctx = parse_cxt(MUSIC).unwrap();
        assert_eq!(ctx.to_cxt(), MUSIC);
    }

    proptest! {
        #[test]
        fn cxt_round_trip(
            n in 0usize..6,
            k in 0usize..6,
            bits in proptest::collection::vec(any::<bool>(), 36),
        ) {
            let objects = (0..n).map(|i| format!("g{i}")).collect();
            let attributes = (0..k).map(|i| format!("m {i}")).collect();
            let pairs: Vec<_> = (0..n)
                .flat_map(|g| (0..k).map(move |m| (g, m)))
                .filter(|&(g, m)| bits[g * 6 + m])
                .collect();
            let ctx = FormalContext::new(objects, attributes, pairs).unwrap();
            let back = parse_cxt(&ctx.to_cxt()).unwrap();
            prop_assert_eq!(back, ctx);
        }
    }
}
