//! Loading a labeled news corpus laid out as `<root>/<category>/<file>`.
//!
//! Each first-level subdirectory of the root is one category and each regular
//! file inside it is one document. Deeper nesting is ignored. Files are decoded
//! as UTF-8 with invalid sequences replaced by U+FFFD.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use log::{info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A category label, taken verbatim from a directory name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Category(String);

impl Category {
    /// Returns `None` for an empty name.
    pub fn new(name: impl Into<String>) -> Option<Self> {
        let name = name.into();
        if name.is_empty() {
            None
        } else {
            Some(Self(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    /// `category/file-stem`
    pub id: String,
    pub category: Category,
    pub raw_text: String,
}

/// A file that could not be read and was left out of the corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IngestWarning {
    pub path: PathBuf,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    /// Sorted by id.
    pub documents: Vec<Document>,
    pub categories: BTreeSet<Category>,
    pub warnings: Vec<IngestWarning>,
}

impl Corpus {
    /// Builds a corpus from documents already in memory, sorting them by id.
    pub fn from_documents(mut documents: Vec<Document>) -> Self {
        documents.sort_by(|a, b| a.id.cmp(&b.id));
        let categories = documents.iter().map(|d| d.category.clone()).collect();
        Self {
            documents,
            categories,
            warnings: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Document> {
        self.documents
            .binary_search_by(|d| d.id.as_str().cmp(id))
            .ok()
            .map(|i| &self.documents[i])
    }

    /// Number of documents per category, in category order.
    pub fn category_counts(&self) -> Vec<(Category, usize)> {
        self.categories
            .iter()
            .map(|c| {
                let n = self.documents.iter().filter(|d| &d.category == c).count();
                (c.clone(), n)
            })
            .collect()
    }
}

fn read_lossy(path: &Path) -> std::io::Result<String> {
    let bytes = fs::read(path)?;
    Ok(match String::from_utf8(bytes) {
        Ok(s) => s,
        Err(e) => String::from_utf8_lossy(e.as_bytes()).into_owned(),
    })
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .or_else(|| path.file_name())
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

/// Reads one file as a document of the given category.
pub fn load_single(path: impl AsRef<Path>, category: Category) -> Result<Document> {
    let path = path.as_ref();
    let raw_text = read_lossy(path).map_err(|source| Error::Ingest {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Document {
        id: format!("{}/{}", category, file_stem(path)),
        category,
        raw_text,
    })
}

// Sorted, without dot-files (.DS_Store and friends).
fn sorted_entries(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut paths = fs::read_dir(dir)?
        .map(|entry| entry.map(|e| e.path()))
        .filter(|p| !matches!(p, Ok(p) if p.file_name().is_some_and(|n| n.as_encoded_bytes().starts_with(b"."))))
        .collect::<std::io::Result<Vec<_>>>()?;
    paths.sort();
    Ok(paths)
}

/// Loads every regular file under the first-level subdirectories of `root`.
/// Files directly under `root` and hidden entries are ignored.
///
/// Unreadable files and subdirectories are skipped and recorded in
/// [`Corpus::warnings`]; only an unreadable root, or a root with no documents at
/// all, is an error.
pub fn load_corpus(root: impl AsRef<Path>) -> Result<Corpus> {
    let root = root.as_ref();
    let ingest_err = |source| Error::Ingest {
        path: root.to_path_buf(),
        source,
    };
    if !root.is_dir() {
        let source = if root.exists() {
            std::io::Error::other("not a directory")
        } else {
            std::io::Error::new(std::io::ErrorKind::NotFound, "no such directory")
        };
        return Err(ingest_err(source));
    }

    let mut warnings = Vec::new();
    let mut jobs: Vec<(Category, PathBuf)> = Vec::new();
    for dir in sorted_entries(root).map_err(ingest_err)? {
        if !dir.is_dir() {
            continue;
        }
        let Some(category) = dir
            .file_name()
            .and_then(|n| Category::new(n.to_string_lossy().into_owned()))
        else {
            continue;
        };
        match sorted_entries(&dir) {
            Ok(files) => jobs.extend(
                files
                    .into_iter()
                    .filter(|p| p.is_file())
                    .map(|p| (category.clone(), p)),
            ),
            Err(e) => {
                warn!("skipping {}: {}", dir.display(), e);
                warnings.push(IngestWarning {
                    path: dir,
                    message: e.to_string(),
                });
            }
        }
    }

    let loaded: Vec<_> = jobs
        .into_par_iter()
        .map(|(category, path)| match read_lossy(&path) {
            Ok(text) => Ok((category, path, text)),
            Err(e) => Err(IngestWarning {
                path,
                message: e.to_string(),
            }),
        })
        .collect();

    let mut seen = HashSet::new();
    let mut documents = Vec::with_capacity(loaded.len());
    for item in loaded {
        match item {
            Ok((category, path, raw_text)) => {
                let mut id = format!("{}/{}", category, file_stem(&path));
                if !seen.insert(id.clone()) {
                    // Two files sharing a stem ("a.txt", "a.md"): fall back to the full name.
                    let name = path.file_name().unwrap_or_default().to_string_lossy();
                    id = format!("{}/{}", category, name);
                    seen.insert(id.clone());
                }
                documents.push(Document {
                    id,
                    category,
                    raw_text,
                });
            }
            Err(w) => {
                warn!("skipping {}: {}", w.path.display(), w.message);
                warnings.push(w);
            }
        }
    }

    if documents.is_empty() {
        return Err(Error::NoDocuments(root.to_path_buf()));
    }
    let mut corpus = Corpus::from_documents(documents);
    info!(
        "loaded {} documents in {} categories from {} ({} skipped)",
        corpus.len(),
        corpus.categories.len(),
        root.display(),
        warnings.len()
    );
    corpus.warnings = warnings;
    Ok(corpus)
}
