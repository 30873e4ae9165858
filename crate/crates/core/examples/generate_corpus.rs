//! Write a small benchmark corpus of `.ds` files.
//!
//! `cargo run --example generate_corpus -- <dir>` (defaults to `./corpus`).

use std::fs;
use std::path::PathBuf;

use domset::{generate_instance, write_ds, InstanceKind};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus".into()));
    fs::create_dir_all(&dir)?;

    let mut kinds = Vec::new();
    for n in [16, 200, 1_000] {
        kinds.push(InstanceKind::Gnp { n, p: 6.0 / n as f64 });
        kinds.push(InstanceKind::Tree { n });
    }
    kinds.push(InstanceKind::Grid { rows: 3, cols: 5 });
    kinds.push(InstanceKind::Grid { rows: 25, cols: 40 });
    kinds.push(InstanceKind::StarForest { stars: 50, max_leaves: 6 });

    for (i, kind) in kinds.into_iter().enumerate() {
        let g = generate_instance(kind, i as u64).unwrap();
        let path = dir.join(format!("{i:02}.ds"));
        fs::write(&path, format!("c {kind}\n{}", write_ds(&g)))?;
        println!("{} n={} m={}", path.display(), g.n(), g.m());
    }
    Ok(())
}
