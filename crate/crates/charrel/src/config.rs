use std::path::PathBuf;

use clap::{Args, ValueEnum};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct Config {
    /// Largest n for which full character tables are built
    #[arg(long, global = true, default_value_t = 25)]
    pub max_table_n: u32,
    /// Largest class enumerated element by element
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub enumeration_cap: u64,
    /// Directory holding cached character tables
    #[arg(long, global = true, env = "CHARREL_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Skip the table cache entirely
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub output: OutputMode,
    /// Worker threads for table fills (0 picks the number of cores)
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_table_n: 25,
            enumeration_cap: 10_000_000,
            cache_dir: None,
            no_cache: false,
            output: OutputMode::Text,
            threads: 0,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_table_n == 0 || self.enumeration_cap == 0 {
            return Err(CliError::Usage("caps must be positive".into()));
        }
        Ok(())
    }

    /// The cache directory, or `None` when caching is off.
    pub fn cache_path(&self) -> Option<PathBuf> {
        if self.no_cache {
            return None;
        }
        Some(
            self.cache_dir
                .clone()
                .unwrap_or_else(|| std::env::temp_dir().join("charrel-cache")),
        )
    }
}
