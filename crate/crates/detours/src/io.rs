//! Line-oriented graph6 input.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

const HEADER: &str = ">>graph6<<";

/// One non-empty input line with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub number: usize,
    pub text: String,
}

/// Yields the graph6 lines of a reader, dropping blank lines, line
/// terminators and the optional `>>graph6<<` header (either on its own line
/// or prefixed to the first graph).
pub fn graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = io::Result<Line>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(idx, line)| match line {
            Err(e) => Some(Err(e)),
            Ok(raw) => {
                let mut text = raw.trim_end_matches(['\r', '\n']);
                if idx == 0 {
                    text = text.strip_prefix(HEADER).unwrap_or(text);
                }
                let text = text.trim();
                (!text.is_empty()).then(|| {
                    Ok(Line {
                        number: idx + 1,
                        text: text.to_string(),
                    })
                })
            }
        })
}

/// Opens `path`, or standard input for `-`.
pub fn open_input(path: &str) -> io::Result<Box<dyn BufRead>> {
    if path == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(Path::new(path))?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(text: &str) -> Vec<(usize, String)> {
        graph6_lines(text.as_bytes())
            .map(|l| l.unwrap())
            .map(|l| (l.number, l.text))
            .collect()
    }

    #[test]
    fn strips_header_and_blanks() {
        assert_eq!(
            collect(">>graph6<<\nC~\n\nCl\r\n"),
            vec![(2, "C~".to_string()), (4, "Cl".to_string())]
        );
        assert_eq!(collect(">>graph6<<C~\n"), vec![(1, "C~".to_string())]);
        assert!(collect("").is_empty());
    }
}
