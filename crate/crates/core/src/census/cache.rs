//! Append-only JSONL cache of census records, one file per
//! `(source, size)` where size is the vertex count for wheels and the
//! dimension otherwise.
//!
//! A sidecar `.complete` file records how far the file is known to be
//! complete: `all`, or the largest facet-excess cap of a finished run.

use std::collections::BTreeSet;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use crate::census::{CensusRecord, RecordLine, Source};
use crate::error::{Error, Result};

pub const CACHE_ENV: &str = "POLYFEW_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Coverage {
    BetaAtMost(usize),
    All,
}

impl Coverage {
    fn of(beta_cap: Option<usize>) -> Self {
        beta_cap.map_or(Coverage::All, Coverage::BetaAtMost)
    }

    fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "all" => Some(Coverage::All),
            t => t.parse().ok().map(Coverage::BetaAtMost),
        }
    }

    fn render(self) -> String {
        match self {
            Coverage::All => "all".into(),
            Coverage::BetaAtMost(b) => b.to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusCache {
    dir: PathBuf,
}

impl CensusCache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn stem(source: Source, size: usize) -> String {
        format!("{}-{size:02}", source.as_str())
    }

    pub fn records_path(&self, source: Source, size: usize) -> PathBuf {
        self.dir.join(format!("{}.jsonl", Self::stem(source, size)))
    }

    fn marker_path(&self, source: Source, size: usize) -> PathBuf {
        self.dir
            .join(format!("{}.complete", Self::stem(source, size)))
    }

    fn coverage(&self, source: Source, size: usize) -> Option<Coverage> {
        let text = fs::read_to_string(self.marker_path(source, size)).ok()?;
        Coverage::parse(&text)
    }

    fn read_all(&self, source: Source, size: usize) -> Result<Vec<CensusRecord>> {
        let path = self.records_path(source, size);
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let parsed: RecordLine = serde_json::from_str(&line)
                .map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
            out.push(parsed.into_record()?);
        }
        Ok(out)
    }

    /// Records with facet excess at most `beta_cap`, if a finished run
    /// covered that cap.
    pub fn load(
        &self,
        source: Source,
        size: usize,
        beta_cap: Option<usize>,
    ) -> Result<Option<Vec<CensusRecord>>> {
        match self.coverage(source, size) {
            Some(c) if c >= Coverage::of(beta_cap) => {}
            _ => return Ok(None),
        }
        let records = self
            .read_all(source, size)?
            .into_iter()
            .filter(|r| beta_cap.is_none_or(|b| r.beta <= b))
            .collect();
        Ok(Some(records))
    }

    /// Appends records not already present and widens the completion
    /// marker to `beta_cap`.
    pub fn store(
        &self,
        source: Source,
        size: usize,
        beta_cap: Option<usize>,
        records: &[CensusRecord],
    ) -> Result<()> {
        let known: BTreeSet<_> = self
            .read_all(source, size)?
            .into_iter()
            .map(|r| r.key)
            .collect();
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(self.records_path(source, size))?;
        let mut buf = String::new();
        for r in records.iter().filter(|r| !known.contains(&r.key)) {
            buf.push_str(&r.to_json_line());
            buf.push('\n');
        }
        file.write_all(buf.as_bytes())?;
        file.sync_data()?;
        let coverage = self
            .coverage(source, size)
            .map_or(Coverage::of(beta_cap), |c| c.max(Coverage::of(beta_cap)));
        fs::write(self.marker_path(source, size), coverage.render())?;
        Ok(())
    }
}
