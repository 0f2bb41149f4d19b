//! Regenerates the shipped corpus directory. Usage: `gen-corpus [dir]`

use polyq_cli::io::InputDocument;
use polyq_core::corpus;

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "corpus".into());
    std::fs::create_dir_all(&dir).expect("create corpus directory");
    let mut entries = corpus::matroid_corpus(6);
    entries.extend(corpus::polymatroid_corpus());
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    for entry in &entries {
        let doc = InputDocument::from_polymatroid(Some(entry.name.clone()), &entry.polymatroid);
        let path = format!("{dir}/{}.json", entry.name);
        std::fs::write(&path, doc.to_json() + "\n").expect("write corpus file");
        println!("{path}");
    }
    println!("{} files", entries.len());
}
