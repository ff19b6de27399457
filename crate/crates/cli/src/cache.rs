//! On-disk cache of finished reports and exported matrices.
//!
//! Entries are named by the SHA-256 of everything that determines their
//! contents. A lock file keeps a second process from writing at the same time.

use std::fs::{self, OpenOptions};
use std::io::ErrorKind;
use std::path::{Path, PathBuf};
use std::thread::sleep;
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

const LOCK_NAME: &str = ".lock";
const LOCK_WAIT: Duration = Duration::from_secs(60);

pub struct Cache {
    dir: PathBuf,
}

/// Removes the lock file when dropped.
pub struct LockGuard {
    path: PathBuf,
}

impl Drop for LockGuard {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

pub fn key(material: &str) -> String {
    hex::encode(Sha256::digest(material.as_bytes()))
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str, ext: &str) -> PathBuf {
        self.dir.join(format!("{key}.{ext}"))
    }

    pub fn get(&self, key: &str, ext: &str) -> Result<Option<String>> {
        match fs::read_to_string(self.path(key, ext)) {
            Ok(s) => Ok(Some(s)),
            Err(e) if e.kind() == ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    pub fn lock(&self) -> Result<LockGuard> {
        let path = self.dir.join(LOCK_NAME);
        let start = Instant::now();
        loop {
            match OpenOptions::new().write(true).create_new(true).open(&path) {
                Ok(_) => return Ok(LockGuard { path }),
                Err(e) if e.kind() == ErrorKind::AlreadyExists => {
                    if start.elapsed() > LOCK_WAIT {
                        return Err(CliError::Cache(format!(
                            "{} is held by another process; remove it if that process is gone",
                            path.display()
                        )));
                    }
                    sleep(Duration::from_millis(100));
                }
                Err(e) => return Err(e.into()),
            }
        }
    }

    /// Write through a temporary file so readers never see a partial entry.
    pub fn put(&self, key: &str, ext: &str, contents: &str) -> Result<()> {
        let _guard = self.lock()?;
        let tmp = self.dir.join(format!("{key}.{ext}.tmp"));
        fs::write(&tmp, contents)?;
        fs::rename(&tmp, self.path(key, ext))?;
        Ok(())
    }
}
