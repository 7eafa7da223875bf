use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::table::ElementTable;
use super::types::CoxeterType;
use crate::error::{Error, Result};
use crate::subset::Subset;

const MAGIC: &[u8; 4] = b"DWB1";

/// File name used for a given type inside a cache directory.
pub fn cache_path(dir: &Path, ty: CoxeterType) -> PathBuf {
    dir.join(format!("{}.dwb", ty.tag()))
}

/// Serialize an element table. Records are stored in enumeration order:
/// the simple-root images (one byte each) followed by the left and right
/// descent masks.
pub fn encode(table: &ElementTable) -> Option<Vec<u8>> {
    let keys = table.keys()?;
    let ty = table.coxeter_type();
    let rank = table.rank();
    let roots = table.root_system()?.len();
    let mut layers = vec![0usize; table.length(table.len() as u32 - 1) + 1];
    for w in table.ids() {
        layers[table.length(w)] += 1;
    }
    let mut out = Vec::with_capacity(32 + keys.len() * (rank + 2));
    out.extend_from_slice(MAGIC);
    out.push(ty.family().letter() as u8);
    out.extend_from_slice(&(ty.param() as u32).to_le_bytes());
    out.push(rank as u8);
    out.extend_from_slice(&(keys.len() as u64).to_le_bytes());
    out.extend_from_slice(&(roots as u16).to_le_bytes());
    out.extend_from_slice(&(layers.len() as u32).to_le_bytes());
    for l in &layers {
        out.extend_from_slice(&(*l as u32).to_le_bytes());
    }
    for (w, &k) in keys.iter().enumerate() {
        out.extend((0..rank).map(|i| (k >> (8 * i)) as u8));
        out.push(table.left_descents(w as u32).bits() as u8);
        out.push(table.right_descents(w as u32).bits() as u8);
    }
    Some(out)
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
    path: &'a Path,
}

impl Reader<'_> {
    fn take(&mut self, n: usize) -> Result<&[u8]> {
        if self.pos + n > self.bytes.len() {
            return Err(self.corrupt("truncated"));
        }
        let s = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }
    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }
    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }
    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
    fn corrupt(&self, reason: &str) -> Error {
        Error::CorruptCache { path: self.path.to_path_buf(), reason: reason.to_string() }
    }
}

pub fn decode(ty: CoxeterType, bytes: &[u8], path: &Path) -> Result<ElementTable> {
    let mut r = Reader { bytes, pos: 0, path };
    if r.take(4)? != MAGIC {
        return Err(r.corrupt("bad magic"));
    }
    let letter = r.u8()?;
    let param = r.u32()? as usize;
    if letter != ty.family().letter() as u8 || param != ty.param() {
        return Err(r.corrupt("type tag mismatch"));
    }
    let rank = r.u8()? as usize;
    let order = r.u64()?;
    let _roots = r.u16()?;
    if rank != ty.rank() || order != ty.order() {
        return Err(r.corrupt("header mismatch"));
    }
    let nlayers = r.u32()? as usize;
    let layers = (0..nlayers).map(|_| r.u32().map(|v| v as usize)).collect::<Result<Vec<_>>>()?;
    if layers.iter().sum::<usize>() as u64 != order {
        return Err(r.corrupt("layer sizes do not sum to the group order"));
    }
    let mut keys = Vec::with_capacity(order as usize);
    let mut lengths = Vec::with_capacity(order as usize);
    let mut left = Vec::with_capacity(order as usize);
    let mut right = Vec::with_capacity(order as usize);
    for (l, &size) in layers.iter().enumerate() {
        for _ in 0..size {
            let rec = r.take(rank + 2)?;
            keys.push(rec[..rank].iter().enumerate().fold(0u64, |k, (i, &b)| k | (b as u64) << (8 * i)));
            lengths.push(l as u16);
            left.push(Subset(rec[rank] as u16));
            right.push(rec[rank + 1] as u16);
        }
    }
    if r.pos != bytes.len() {
        return Err(r.corrupt("trailing bytes"));
    }
    let table = ElementTable::from_keys(ty, &keys, &lengths, &left)
        .map_err(|e| Error::CorruptCache { path: path.to_path_buf(), reason: e.to_string() })?;
    for (w, &rt) in right.iter().enumerate() {
        if table.right_descents(w as u32).bits() != rt {
            return Err(r.corrupt(&format!("descent mismatch at record {w}")));
        }
    }
    Ok(table)
}

/// Write via a temporary file and rename, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}
