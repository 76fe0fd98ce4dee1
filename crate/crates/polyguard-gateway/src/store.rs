//! Append-only run persistence: moderation, jury and eval events written as
//! line-delimited records with gapless sequence numbers and content
//! checksums, replayable for audit.
//!
//! Records are immutable once written. The store holds a single-writer
//! contract: appends serialize through one mutex-guarded file handle and
//! are flushed before the sequence number is handed back.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const LOG_FILE: &str = "run.log";

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error("store io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("store record {seq} is corrupt: {detail}")]
    Corrupt { seq: u64, detail: String },
    #[error("sequence gap: expected {expected}, found {found}")]
    SequenceGap { expected: u64, found: u64 },
    #[error("store serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

/// One persisted event.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StoreRecord {
    pub seq: u64,
    pub kind: String,
    pub payload: serde_json::Value,
    pub checksum: String,
}

fn checksum(seq: u64, kind: &str, payload: &serde_json::Value) -> String {
    let mut hasher = Sha256::new();
    hasher.update(seq.to_le_bytes());
    hasher.update(kind.as_bytes());
    hasher.update(payload.to_string().as_bytes());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// The append-only store for one run directory.
pub struct RunStore {
    path: PathBuf,
    inner: Mutex<WriterState>,
}

struct WriterState {
    file: File,
    next_seq: u64,
}

impl RunStore {
    /// Opens (or creates) the store in `dir`, resuming the sequence from
    /// any existing log after validating it.
    pub fn open(dir: impl AsRef<Path>) -> Result<RunStore, StoreError> {
        std::fs::create_dir_all(dir.as_ref())?;
        let path = dir.as_ref().join(LOG_FILE);
        let next_seq = if path.exists() {
            let records = replay_path(&path)?;
            records.last().map(|r| r.seq + 1).unwrap_or(0)
        } else {
            0
        };
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(RunStore {
            path,
            inner: Mutex::new(WriterState { file, next_seq }),
        })
    }

    /// Appends one event and returns its sequence number.
    pub fn append(&self, kind: &str, payload: &impl Serialize) -> Result<u64, StoreError> {
        let payload = serde_json::to_value(payload)?;
        let mut state = self.inner.lock().expect("store lock");
        let seq = state.next_seq;
        let record = StoreRecord {
            seq,
            kind: kind.to_string(),
            checksum: checksum(seq, kind, &payload),
            payload,
        };
        let line = serde_json::to_string(&record)?;
        state.file.write_all(line.as_bytes())?;
        state.file.write_all(b"\n")?;
        state.file.flush()?;
        state.next_seq += 1;
        Ok(seq)
    }

    /// Re-reads the whole log, validating checksums and sequence gaplessness.
    pub fn replay(&self) -> Result<Vec<StoreRecord>, StoreError> {
        replay_path(&self.path)
    }

    pub fn log_path(&self) -> &Path {
        &self.path
    }
}

fn replay_path(path: &Path) -> Result<Vec<StoreRecord>, StoreError> {
    let file = File::open(path)?;
    let reader = BufReader::new(file);
    let mut records = Vec::new();
    let mut expected_seq = 0u64;
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: StoreRecord = serde_json::from_str(&line)?;
        if record.seq != expected_seq {
            return Err(StoreError::SequenceGap { expected: expected_seq, found: record.seq });
        }
        let recomputed = checksum(record.seq, &record.kind, &record.payload);
        if recomputed != record.checksum {
            return Err(StoreError::Corrupt {
                seq: record.seq,
                detail: format!("checksum {} != recorded {}", recomputed, record.checksum),
            });
        }
        expected_seq += 1;
        records.push(record);
    }
    Ok(records)
}
