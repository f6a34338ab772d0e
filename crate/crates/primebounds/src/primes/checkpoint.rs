//! Checkpoint persistence for resumable π/θ computations, plus the
//! binary bitmap cache.
//!
//! Checkpoint files are plain text: one `x,pi,theta_value,theta_abs_error`
//! record per line (θ fields as decimal strings with 17 significant
//! digits) and a trailing `# sha256=…` checksum line over everything
//! before it. The θ value of each record is defined as the previous
//! record's value plus a fresh compensated sum over the stride interval,
//! so a resumed build reproduces a fresh build byte for byte.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::{PrimeBlock, Sieve, ThetaValue};
use crate::{Error, Result};

/// An exact (x, π(x)) anchor with a θ(x) enclosure.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Checkpoint {
    pub x: u64,
    pub pi: u64,
    pub theta: ThetaValue,
}

fn corrupt(path: &Path, detail: impl Into<String>) -> Error {
    Error::CorruptFile {
        path: path.display().to_string(),
        detail: detail.into(),
    }
}

fn render_records(records: &[Checkpoint]) -> String {
    let mut body = String::new();
    for r in records {
        // 17 significant digits round-trip any f64 exactly.
        let _ = writeln!(
            body,
            "{},{},{:.16e},{:.16e}",
            r.x, r.pi, r.theta.value, r.theta.abs_error
        );
    }
    body
}

fn checksum_line(body: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(body.as_bytes());
    format!("# sha256={:x}\n", hasher.finalize())
}

/// Writes a checkpoint file (records plus trailing checksum line).
pub fn save_checkpoints(path: &Path, records: &[Checkpoint]) -> Result<()> {
    let body = render_records(records);
    let mut f = fs::File::create(path)?;
    f.write_all(body.as_bytes())?;
    f.write_all(checksum_line(&body).as_bytes())?;
    Ok(())
}

/// Loads and validates a checkpoint file.
pub fn load_checkpoints(path: &Path) -> Result<Vec<Checkpoint>> {
    let text = fs::read_to_string(path)?;
    let Some(tail_start) = text.rfind("# sha256=") else {
        return Err(corrupt(path, "missing checksum line"));
    };
    let body = &text[..tail_start];
    let tail = text[tail_start..].trim_end();
    if checksum_line(body).trim_end() != tail {
        return Err(corrupt(path, "checksum mismatch"));
    }
    let mut records = Vec::new();
    for (lineno, line) in body.lines().enumerate() {
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 4 {
            return Err(corrupt(path, format!("line {}: expected 4 fields", lineno + 1)));
        }
        let parse_err = |what: &str| corrupt(path, format!("line {}: bad {what}", lineno + 1));
        let x: u64 = parts[0].parse().map_err(|_| parse_err("x"))?;
        let pi: u64 = parts[1].parse().map_err(|_| parse_err("pi"))?;
        let value: f64 = parts[2].parse().map_err(|_| parse_err("theta_value"))?;
        let abs_error: f64 = parts[3].parse().map_err(|_| parse_err("theta_abs_error"))?;
        if abs_error < 0.0 {
            return Err(parse_err("theta_abs_error"));
        }
        records.push(Checkpoint { x, pi, theta: ThetaValue { value, abs_error } });
    }
    for w in records.windows(2) {
        if w[0].x >= w[1].x || w[0].pi > w[1].pi || w[0].theta.value > w[1].theta.value {
            return Err(corrupt(path, "records are not monotone in x"));
        }
    }
    Ok(records)
}

/// Builds (or extends) a checkpoint file with records at multiples of
/// `stride` up to `limit`. Existing valid records are reused, so the
/// call is idempotent and resumable; the resulting file is identical to
/// a fresh build.
pub fn build_checkpoints(
    sieve: &Sieve,
    limit: u64,
    stride: u64,
    path: &Path,
) -> Result<Vec<Checkpoint>> {
    if stride < 1_000_000 {
        return Err(Error::Domain(format!(
            "checkpoint stride must be at least 10^6, got {stride}"
        )));
    }
    let mut records: Vec<Checkpoint> = if path.exists() {
        let existing = load_checkpoints(path)?;
        // Only a stride-aligned prefix can be reused.
        let mut usable = Vec::new();
        for (i, r) in existing.iter().enumerate() {
            if r.x == (i as u64 + 1) * stride && r.x <= limit {
                usable.push(*r);
            } else {
                break;
            }
        }
        usable
    } else {
        Vec::new()
    };

    let targets: Vec<u64> = (1..)
        .map(|k| k * stride)
        .take_while(|&x| x <= limit)
        .collect();
    for (i, &x) in targets.iter().enumerate() {
        if i < records.len() {
            continue; // already on file
        }
        let (prev_x, prev_pi, prev_theta) = match records.last() {
            Some(r) => (r.x, r.pi, r.theta),
            None => (0, 0, ThetaValue::ZERO),
        };
        let tail = sieve.range_stats(prev_x + 1, x)?;
        let value = prev_theta.value + tail.theta.value;
        let abs_error = (prev_theta.abs_error
            + tail.theta.abs_error
            + value.abs() * f64::EPSILON)
            * 1.01;
        records.push(Checkpoint {
            x,
            pi: prev_pi + tail.count,
            theta: ThetaValue { value, abs_error },
        });
    }
    save_checkpoints(path, &records)?;
    Ok(records)
}

const BLOCK_MAGIC: &[u8; 5] = b"PBLK1";

/// Writes a little-endian binary cache of a sieved block, with the
/// versioned `PBLK1` header.
pub fn write_block_cache(path: &Path, block: &PrimeBlock) -> Result<()> {
    let words = block.words();
    let mut buf = Vec::with_capacity(5 + 24 + words.len() * 8);
    buf.extend_from_slice(BLOCK_MAGIC);
    buf.extend_from_slice(&block.lo.to_le_bytes());
    buf.extend_from_slice(&block.hi.to_le_bytes());
    buf.extend_from_slice(&(words.len() as u64).to_le_bytes());
    for w in words {
        buf.extend_from_slice(&w.to_le_bytes());
    }
    fs::write(path, buf)?;
    Ok(())
}

/// Reads a `PBLK1` bitmap cache back into a block.
pub fn read_block_cache(path: &Path) -> Result<PrimeBlock> {
    let buf = fs::read(path)?;
    if buf.len() < 29 || &buf[..5] != BLOCK_MAGIC {
        return Err(corrupt(path, "bad or missing PBLK1 header"));
    }
    let u64_at = |off: usize| u64::from_le_bytes(buf[off..off + 8].try_into().unwrap());
    let lo = u64_at(5);
    let hi = u64_at(13);
    let n_words = u64_at(21) as usize;
    if buf.len() != 29 + n_words * 8 {
        return Err(corrupt(path, "truncated bitmap payload"));
    }
    let words: Vec<u64> = (0..n_words).map(|i| u64_at(29 + i * 8)).collect();
    PrimeBlock::from_raw(lo, hi, words).map_err(|e| match e {
        Error::CorruptFile { detail, .. } => corrupt(path, detail),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.txt");
        let sieve = Sieve::new(10_000_000);

        let records = build_checkpoints(&sieve, 10_000_000, 1_000_000, &path).unwrap();
        assert_eq!(records.len(), 10);
        assert_eq!(records.last().unwrap().pi, 664_579);
        assert_eq!(records[0].pi, 78_498);

        let single = dir.path().join("single.txt");
        let records = build_checkpoints(&sieve, 1_000_000, 1_000_000, &single).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].pi, 78_498);

        let empty = dir.path().join("empty.txt");
        let records = build_checkpoints(&sieve, 0, 1_000_000, &empty).unwrap();
        assert!(records.is_empty());
        assert!(load_checkpoints(&empty).unwrap().is_empty());
    }

    #[test]
    fn stride_floor_is_enforced() {
        let dir = tempfile::tempdir().unwrap();
        let sieve = Sieve::new(1 << 21);
        let err = build_checkpoints(&sieve, 1 << 21, 1000, &dir.path().join("x.txt"));
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn resume_reproduces_fresh_build() {
        let dir = tempfile::tempdir().unwrap();
        let sieve = Sieve::new(5_000_000);

        let fresh = dir.path().join("fresh.txt");
        build_checkpoints(&sieve, 5_000_000, 1_000_000, &fresh).unwrap();

        let resumed = dir.path().join("resumed.txt");
        build_checkpoints(&sieve, 3_000_000, 1_000_000, &resumed).unwrap();
        build_checkpoints(&sieve, 5_000_000, 1_000_000, &resumed).unwrap();

        assert_eq!(fs::read(&fresh).unwrap(), fs::read(&resumed).unwrap());

        // Idempotent: rebuilding changes nothing.
        build_checkpoints(&sieve, 5_000_000, 1_000_000, &resumed).unwrap();
        assert_eq!(fs::read(&fresh).unwrap(), fs::read(&resumed).unwrap());
    }

    #[test]
    fn corruption_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.txt");
        let sieve = Sieve::new(2_000_000);
        build_checkpoints(&sieve, 2_000_000, 1_000_000, &path).unwrap();

        let mut bytes = fs::read(&path).unwrap();
        let pos = bytes.iter().position(|&b| b == b'7').unwrap();
        bytes[pos] = b'8';
        fs::write(&path, &bytes).unwrap();
        assert!(matches!(
            load_checkpoints(&path),
            Err(Error::CorruptFile { .. })
        ));

        fs::write(&path, b"1000000,78498,9.8e5,1e-9\n").unwrap();
        assert!(matches!(
            load_checkpoints(&path),
            Err(Error::CorruptFile { .. })
        ));
    }

    #[test]
    fn checkpoints_accelerate_queries_consistently() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.txt");
        let sieve = Sieve::new(4_000_000);
        let records = build_checkpoints(&sieve, 4_000_000, 1_000_000, &path).unwrap();

        let with = super::super::Primes::with_checkpoints(4_000_000, records);
        let without = super::super::Primes::new(4_000_000);
        for x in [999_999u64, 1_000_000, 1_500_000, 3_999_999] {
            assert_eq!(with.pi(x).unwrap(), without.pi(x).unwrap(), "x = {x}");
            let a = with.theta(x).unwrap();
            let b = without.theta(x).unwrap();
            assert!((a.value - b.value).abs() <= a.abs_error + b.abs_error);
        }
    }

    #[test]
    fn block_cache_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("block.pblk");
        let sieve = Sieve::new(1 << 21);
        let block = sieve.sieve_segment(1_000_000, 1_100_000).unwrap();
        write_block_cache(&path, &block).unwrap();
        let back = read_block_cache(&path).unwrap();
        assert_eq!(back.lo, block.lo);
        assert_eq!(back.hi, block.hi);
        assert_eq!(
            back.iter_primes().collect::<Vec<_>>(),
            block.iter_primes().collect::<Vec<_>>()
        );

        let mut bytes = fs::read(&path).unwrap();
        bytes[0] = b'Q';
        fs::write(&path, &bytes).unwrap();
        assert!(matches!(
            read_block_cache(&path),
            Err(Error::CorruptFile { .. })
        ));
    }
}
