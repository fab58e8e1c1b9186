//! A set of canonical forms that moves to sorted temporary files once it
//! outgrows a memory bound.
//!
//! Each spill writes the in-memory set as one sorted run of fixed 17-byte
//! records; membership binary-searches every run. Runs are disjoint because
//! an insert checks all of them first.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Read, Seek, SeekFrom, Write};

use mhc_core::canon::CanonicalForm;

const RECORD: u64 = 17;

struct Run {
    file: File,
    records: u64,
}

impl Run {
    fn record(&mut self, idx: u64) -> io::Result<[u8; 17]> {
        let mut buf = [0u8; 17];
        self.file.seek(SeekFrom::Start(idx * RECORD))?;
        self.file.read_exact(&mut buf)?;
        Ok(buf)
    }

    fn contains(&mut self, key: &[u8; 17]) -> io::Result<bool> {
        let (mut lo, mut hi) = (0, self.records);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            match self.record(mid)?.cmp(key) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Ok(true),
            }
        }
        Ok(false)
    }
}

pub struct CanonSet {
    bound: usize,
    memory: BTreeSet<[u8; 17]>,
    runs: Vec<Run>,
    len: u64,
}

impl CanonSet {
    /// `bound` is the largest number of forms kept in memory (at least 1).
    pub fn new(bound: usize) -> Self {
        CanonSet {
            bound: bound.max(1),
            memory: BTreeSet::new(),
            runs: Vec::new(),
            len: 0,
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn spilled_runs(&self) -> usize {
        self.runs.len()
    }

    pub fn contains(&mut self, form: &CanonicalForm) -> io::Result<bool> {
        let key = form.to_bytes();
        if self.memory.contains(&key) {
            return Ok(true);
        }
        for run in &mut self.runs {
            if run.contains(&key)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Adds `form`; returns whether it was new.
    pub fn insert(&mut self, form: &CanonicalForm) -> io::Result<bool> {
        if self.contains(form)? {
            return Ok(false);
        }
        self.memory.insert(form.to_bytes());
        self.len += 1;
        if self.memory.len() >= self.bound {
            self.spill()?;
        }
        Ok(true)
    }

    fn spill(&mut self) -> io::Result<()> {
        let mut out = BufWriter::new(tempfile::tempfile()?);
        for key in &self.memory {
            out.write_all(key)?;
        }
        let file = out.into_inner().map_err(|e| e.into_error())?;
        self.runs.push(Run {
            file,
            records: self.memory.len() as u64,
        });
        self.memory.clear();
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mhc_core::canon::canonical_form;
    use mhc_core::graph::Graph;

    fn forms() -> Vec<CanonicalForm> {
        // all labelled graphs on 4 vertices: 64 graphs, 11 classes
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        (0u32..64)
            .map(|m| {
                let edges = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, e)| *e);
                canonical_form(&Graph::from_edges(4, edges).unwrap()).unwrap()
            })
            .collect()
    }

    #[test]
    fn spilling_preserves_membership() {
        for bound in [1, 2, 3, 5, 1000] {
            let mut set = CanonSet::new(bound);
            let fresh = forms().iter().filter(|f| set.insert(f).unwrap()).count();
            assert_eq!(fresh, 11, "bound {bound}");
            assert_eq!(set.len(), 11);
            assert!(forms().iter().all(|f| set.contains(f).unwrap()));
            if bound < 11 {
                assert!(set.spilled_runs() > 0);
            }
        }
    }

    #[test]
    fn absent_forms() {
        let mut set = CanonSet::new(2);
        let k4 = canonical_form(&Graph::complete(4).unwrap()).unwrap();
        let e4 = canonical_form(&Graph::empty(4).unwrap()).unwrap();
        let k5 = canonical_form(&Graph::complete(5).unwrap()).unwrap();
        set.insert(&k4).unwrap();
        set.insert(&e4).unwrap();
        assert!(!set.contains(&k5).unwrap());
        assert!(!set.is_empty());
    }
}
