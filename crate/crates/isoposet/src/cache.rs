//! Persistent result cache: one JSON file per (spec, caps, version) key,
//! digest-checked, written atomically (temp file then rename).

use crate::error::Error;
use crate::group::GroupSpec;
use crate::iso::IsoPoset;
use crate::serialize::{analysis_from_repr, digest, AnalysisRepr, FORMAT_VERSION};
use crate::subgrp::SubgroupLattice;
use crate::{Caps, Result};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Content key: digest of the spec text, the caps, and the format version.
pub fn cache_key(spec: &GroupSpec, caps: &Caps) -> String {
    digest(&(spec.to_string(), caps, FORMAT_VERSION))
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    digest: String,
    payload: AnalysisRepr,
}

pub fn cache_store(dir: &Path, key: &str, repr: &AnalysisRepr) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let file = CacheFile {
        digest: digest(repr),
        payload: repr.clone(),
    };
    let json = serde_json::to_vec(&file)?;
    let tmp = dir.join(format!(".{key}.tmp"));
    std::fs::write(&tmp, &json)?;
    std::fs::rename(&tmp, entry_path(dir, key))?;
    Ok(())
}

/// Load a cache entry. A missing file is a miss (`Ok(None)`); anything
/// unreadable, tampered or stale-versioned is `CorruptEntry` so the caller
/// can recompute and warn.
pub fn cache_load(
    dir: &Path,
    key: &str,
    caps: &Caps,
) -> Result<Option<(SubgroupLattice, IsoPoset)>> {
    let path = entry_path(dir, key);
    let bytes = match std::fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let file: CacheFile = serde_json::from_slice(&bytes)
        .map_err(|e| Error::CorruptEntry(format!("unreadable cache file: {e}")))?;
    if digest(&file.payload) != file.digest {
        return Err(Error::CorruptEntry("cache digest mismatch".into()));
    }
    let (l, ip) = analysis_from_repr(&file.payload, caps)?;
    Ok(Some((l, ip)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct;
    use crate::iso::build_iso_poset;
    use crate::serialize::{analysis_repr, poset_digest};
    use crate::subgrp::enumerate_subgroups;

    fn analyze(spec: &GroupSpec, caps: &Caps) -> (SubgroupLattice, IsoPoset) {
        let g = construct(spec, caps).unwrap();
        let l = enumerate_subgroups(&g, caps).unwrap();
        let ip = build_iso_poset(&l, caps).unwrap();
        (l, ip)
    }

    #[test]
    fn round_trip() {
        let caps = Caps::default();
        let dir = tempfile::tempdir().unwrap();
        let spec = GroupSpec::Dihedral(12);
        let (l, ip) = analyze(&spec, &caps);
        let key = cache_key(&spec, &caps);
        assert!(cache_load(dir.path(), &key, &caps).unwrap().is_none());
        cache_store(dir.path(), &key, &analysis_repr(&l, &ip)).unwrap();
        let (l2, ip2) = cache_load(dir.path(), &key, &caps).unwrap().unwrap();
        assert_eq!(l2.len(), l.len());
        assert_eq!(poset_digest(&ip2.poset), poset_digest(&ip.poset));
    }

    #[test]
    fn truncated_file_is_corrupt() {
        let caps = Caps::default();
        let dir = tempfile::tempdir().unwrap();
        let spec = GroupSpec::Cyclic(6);
        let (l, ip) = analyze(&spec, &caps);
        let key = cache_key(&spec, &caps);
        cache_store(dir.path(), &key, &analysis_repr(&l, &ip)).unwrap();
        let path = dir.path().join(format!("{key}.json"));
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() / 2]).unwrap();
        assert!(matches!(
            cache_load(dir.path(), &key, &caps),
            Err(Error::CorruptEntry(_))
        ));
        // recompute path still works
        let (l2, _) = analyze(&spec, &caps);
        assert_eq!(l2.len(), l.len());
    }

    #[test]
    fn different_caps_different_key() {
        let caps1 = Caps::default();
        let caps2 = Caps {
            table_cap: 100,
            ..Caps::default()
        };
        let spec = GroupSpec::Cyclic(6);
        assert_ne!(cache_key(&spec, &caps1), cache_key(&spec, &caps2));
    }
}
