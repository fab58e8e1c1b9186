//! Line-oriented graph6 input.

use std::io::{self, BufRead};

use mhc_core::graph::Graph;

use crate::graph6::{parse_graph6, Graph6Error};

#[derive(Debug, thiserror::Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Malformed {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Parses graph6 lines lazily, numbering lines from 1. Blank lines are
/// skipped but still counted.
pub struct Graph6Lines<R> {
    reader: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R) -> Self {
        Graph6Lines {
            reader,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<(usize, Graph), StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line += 1;
            let text = self.buf.trim();
            if text.is_empty() {
                continue;
            }
            let line = self.line;
            return Some(
                parse_graph6(text)
                    .map(|g| (line, g))
                    .map_err(|source| StreamError::Malformed { line, source }),
            );
        }
    }
}

/// Reads every graph in input order. In strict mode the first malformed line
/// is an error; otherwise it is handed to `skipped` and reading continues.
/// I/O errors always abort.
pub fn read_graph6<R: BufRead>(
    reader: R,
    strict: bool,
    mut skipped: impl FnMut(&StreamError),
) -> Result<Vec<(usize, Graph)>, StreamError> {
    let mut out = Vec::new();
    for item in Graph6Lines::new(reader) {
        match item {
            Ok(entry) => out.push(entry),
            Err(e @ StreamError::Malformed { .. }) if !strict => skipped(&e),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
