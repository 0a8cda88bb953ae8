//! Writes the shipped manifests into the directory given as the first
//! argument (default `fixtures`).

use std::path::PathBuf;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir)?;
    for (name, text) in lyalg_cli::fixtures::generate() {
        std::fs::write(dir.join(name), text)?;
    }
    Ok(())
}
