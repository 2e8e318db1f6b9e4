//! JSONL verification reports: one self-contained record per line.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use ekrcx::io::{parse_cplx, parse_dimacs, write_cplx, write_dimacs};
use ekrcx::Face;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::{Instance, Part};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartRef {
    /// `graph` (DIMACS text) or `complex` (`.cplx` text).
    pub kind: String,
    pub text: String,
}

/// Enough of an instance to rebuild it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRef {
    /// SHA-256 over the serialized complex, graph and parts.
    pub digest: String,
    pub source: String,
    pub cplx: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coned: Option<(usize, usize)>,
}

impl InstanceRef {
    pub fn of(inst: &Instance) -> Self {
        let cplx = write_cplx(&inst.complex);
        let graph = inst.graph.as_ref().map(write_dimacs);
        let parts: Vec<PartRef> = inst
            .parts
            .iter()
            .map(|p| match p {
                Part::Graph(g) => PartRef {
                    kind: "graph".into(),
                    text: write_dimacs(g),
                },
                Part::Complex(c) => PartRef {
                    kind: "complex".into(),
                    text: write_cplx(c),
                },
            })
            .collect();
        let mut h = Sha256::new();
        h.update(cplx.as_bytes());
        if let Some(g) = &graph {
            h.update(b"\0graph\0");
            h.update(g.as_bytes());
        }
        for p in &parts {
            h.update(b"\0part\0");
            h.update(p.text.as_bytes());
        }
        InstanceRef {
            digest: hex::encode(h.finalize()),
            source: inst.source.clone(),
            cplx,
            graph,
            parts,
            coned: inst.coned,
        }
    }

    pub fn rebuild(&self) -> Result<Instance, CliError> {
        let parts = self
            .parts
            .iter()
            .map(|p| match p.kind.as_str() {
                "graph" => Ok(Part::Graph(parse_dimacs(&p.text)?)),
                "complex" => Ok(Part::Complex(parse_cplx(&p.text)?)),
                other => Err(CliError::Usage(format!("unknown part kind {other:?}"))),
            })
            .collect::<Result<Vec<Part>, CliError>>()?;
        Ok(Instance {
            source: self.source.clone(),
            complex: parse_cplx(&self.cplx)?,
            graph: self.graph.as_deref().map(parse_dimacs).transpose()?,
            parts,
            coned: self.coned,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub prime: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// `family` for an intersecting family, `face` for an offending face,
    /// `complex` for a whole complex.
    pub kind: String,
    pub faces: Vec<Vec<usize>>,
}

impl Witness {
    pub fn family(faces: &[Face]) -> Self {
        Witness {
            kind: "family".into(),
            faces: faces.iter().map(|f| f.to_vec()).collect(),
        }
    }

    pub fn face(face: Face) -> Self {
        Witness {
            kind: "face".into(),
            faces: vec![face.to_vec()],
        }
    }

    pub fn complex(facets: &[Face]) -> Self {
        Witness {
            kind: "complex".into(),
            faces: facets.iter().map(|f| f.to_vec()).collect(),
        }
    }

    pub fn to_faces(&self) -> Result<Vec<Face>, CliError> {
        self.faces
            .iter()
            .map(|f| Face::from_vertices(f.iter().copied()).map_err(CliError::from))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub instance: InstanceRef,
    pub params: Params,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
    pub runtime_ms: f64,
}

impl VerificationReport {
    /// Identity used for resuming: everything except the outcome.
    pub fn key(&self) -> String {
        format!(
            "{}|{}|{}|{:?}|{:?}|{}|{}",
            self.claim_id,
            self.instance.digest,
            self.instance.source,
            self.params.r,
            self.params.t,
            self.params.prime,
            self.params.seed
        )
    }
}

/// Append-only JSONL sink that skips records already present.
pub struct ReportSink {
    path: PathBuf,
    out: BufWriter<File>,
    seen: HashSet<String>,
    written: usize,
    skipped_existing: usize,
}

impl ReportSink {
    /// Opens `path`. With `resume`, keeps existing complete records (and
    /// drops a torn final line); otherwise starts a fresh file.
    pub fn open(path: &Path, resume: bool) -> Result<Self, CliError> {
        let shown = path.display().to_string();
        let mut seen = HashSet::new();
        let file = if resume && path.exists() {
            let mut file = OpenOptions::new()
                .read(true)
                .write(true)
                .open(path)
                .map_err(|e| CliError::io(&shown, e))?;
            let mut text = String::new();
            file.read_to_string(&mut text).map_err(|e| CliError::io(&shown, e))?;
            let complete = text.rfind('\n').map_or(0, |i| i + 1);
            for rec in parse_lines(&text[..complete])? {
                seen.insert(rec.key());
            }
            file.set_len(complete as u64).map_err(|e| CliError::io(&shown, e))?;
            file.seek(SeekFrom::End(0)).map_err(|e| CliError::io(&shown, e))?;
            file
        } else {
            File::create(path).map_err(|e| CliError::io(&shown, e))?
        };
        Ok(ReportSink {
            path: path.to_path_buf(),
            out: BufWriter::new(file),
            seen,
            written: 0,
            skipped_existing: 0,
        })
    }

    pub fn contains(&self, rec: &VerificationReport) -> bool {
        self.seen.contains(&rec.key())
    }

    /// Writes `rec` unless an identical key is already in the log.
    pub fn write(&mut self, rec: &VerificationReport) -> Result<bool, CliError> {
        if !self.seen.insert(rec.key()) {
            self.skipped_existing += 1;
            return Ok(false);
        }
        let line = serde_json::to_string(rec).expect("reports serialize");
        writeln!(self.out, "{line}").map_err(|e| CliError::io(self.path.display().to_string(), e))?;
        self.written += 1;
        Ok(true)
    }

    pub fn flush(&mut self) -> Result<(), CliError> {
        self.out
            .flush()
            .map_err(|e| CliError::io(self.path.display().to_string(), e))
    }

    pub fn written(&self) -> usize {
        self.written
    }

    pub fn skipped_existing(&self) -> usize {
        self.skipped_existing
    }
}

pub fn parse_lines(text: &str) -> Result<Vec<VerificationReport>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|source| CliError::Json { line: i + 1, source }))
        .collect()
}

pub fn read_reports(path: &Path) -> Result<Vec<VerificationReport>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    parse_lines(&text)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }
}

/// Verdict counts per claim.
pub fn summarize<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> BTreeMap<String, Tally> {
    let mut out: BTreeMap<String, Tally> = BTreeMap::new();
    for r in reports {
        out.entry(r.claim_id.clone()).or_default().add(r.verdict);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ekrcx::graphs::cycle;

    fn sample(source: &str, verdict: Verdict) -> VerificationReport {
        let inst = Instance::graph(source.into(), cycle(5).unwrap());
        VerificationReport {
            claim_id: "depth-one".into(),
            instance: InstanceRef::of(&inst),
            params: Params {
                r: None,
                t: None,
                prime: 2_147_483_647,
                seed: 0,
            },
            verdict,
            reason: None,
            witness: None,
            details: None,
            runtime_ms: 0.5,
        }
    }

    #[test]
    fn instance_refs_rebuild() {
        let inst = Instance::graph("c5".into(), cycle(5).unwrap());
        let r = InstanceRef::of(&inst);
        assert_eq!(r.rebuild().unwrap(), inst);
        assert_eq!(r.digest.len(), 64);
    }

    #[test]
    fn resume_skips_and_repairs() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("log.jsonl");
        let mut sink = ReportSink::open(&path, false).unwrap();
        assert!(sink.write(&sample("a", Verdict::Pass)).unwrap());
        assert!(!sink.write(&sample("a", Verdict::Pass)).unwrap());
        sink.flush().unwrap();
        drop(sink);
        // simulate a torn write
        let mut f = OpenOptions::new().append(true).open(&path).unwrap();
        write!(f, "{{\"claim_id\":\"dep").unwrap();
        drop(f);
        let mut sink = ReportSink::open(&path, true).unwrap();
        assert!(!sink.write(&sample("a", Verdict::Fail)).unwrap());
        assert!(sink.write(&sample("b", Verdict::Skipped)).unwrap());
        sink.flush().unwrap();
        let all = read_reports(&path).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].verdict, Verdict::Pass);
        let tally = &summarize(&all)["depth-one"];
        assert_eq!((tally.pass, tally.fail, tally.skipped), (1, 0, 1));
    }
}
