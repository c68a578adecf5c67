use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use textsteg::bench::{self, Format};
use textsteg::metrics::{self, CapacityReport};
use textsteg::{formats, otp, paragraph, random_source, stego};
use textsteg::{CoverSource, Dictionary, Error, Method, Result};

#[derive(Parser)]
#[command(name = "textsteg", version, about = "Hide one-time-pad scrambled messages in English text")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scramble a message with a fresh one-time key.
    Encipher {
        /// Message file (stdin when absent).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Cipher file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the one-time key.
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Recover a message from a cipher file and its one-time key.
    Decipher {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        key: PathBuf,
    },
    /// Hide a cipher file, writing the stego text and stego key.
    Hide {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Stego text output (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        stego_key: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Extract the cipher file from a stego text and its stego key.
    Seek {
        #[arg(long, value_parser = parse_method)]
        method: Method,
        #[arg(long)]
        stego: Option<PathBuf>,
        #[arg(long)]
        stego_key: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Capacity and similarity measurements.
    Measure {
        #[command(subcommand)]
        kind: Measure,
    },
    /// Run the standard sample set through all three methods.
    Bench {
        #[arg(long)]
        dict: Option<PathBuf>,
        /// Prose corpus for the paragraph method (bundled corpus when absent).
        #[arg(long)]
        cover: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List dictionary buckets a method needs but cannot find.
    DictCheck {
        #[arg(long, value_parser = parse_method)]
        method: Method,
        #[arg(long)]
        dict: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SourceArgs {
    #[arg(long, value_parser = parse_method)]
    method: Method,
    /// Dictionary for missing-letter and wordlist (bundled when absent).
    #[arg(long)]
    dict: Option<PathBuf>,
    /// Cover text for paragraph.
    #[arg(long)]
    cover: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Measure {
    /// Percentage capacity, from byte counts or from files.
    Capacity {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        hidden_bytes: Option<usize>,
        #[arg(long, conflicts_with = "cover", required_unless_present = "cover")]
        cover_bytes: Option<usize>,
        /// Hidden data file.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Line-by-line Jaro-Winkler scores of a cover and stego file.
    Jaro {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        stego: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Tsv)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Tsv,
    Md,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Tsv => Format::Tsv,
            OutputFormat::Md => Format::Markdown,
        }
    }
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse()
}

fn read_bytes(path: Option<&Path>) -> Result<Vec<u8>> {
    match path {
        Some(p) => fs::read(p).map_err(|e| with_path(e, p)),
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn read_text(path: Option<&Path>) -> Result<String> {
    let bytes = read_bytes(path)?;
    String::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 0,
        reason: format!("{}: not UTF-8: {e}", display(path)),
    })
}

fn write_bytes(path: Option<&Path>, data: &[u8]) -> Result<()> {
    match path {
        Some(p) => fs::write(p, data).map_err(|e| with_path(e, p)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(data)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn with_path(e: io::Error, path: &Path) -> Error {
    Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn display(path: Option<&Path>) -> String {
    path.map_or_else(|| "stdin".to_string(), |p| p.display().to_string())
}

fn load_dictionary(path: Option<&Path>) -> Result<Dictionary> {
    match path {
        Some(p) => Dictionary::load(&read_text(Some(p))?),
        None => Ok(Dictionary::bundled()),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Encipher { input, out, key, seed } => {
            let message = read_bytes(input.as_deref())?;
            let (cipher, otp_key) = otp::encipher(&message, &mut random_source(seed));
            write_bytes(Some(&key), formats::write_otp_key(&otp_key).as_bytes())?;
            write_bytes(out.as_deref(), formats::write_cipher(&cipher).as_bytes())
        }
        Command::Decipher { input, out, key } => {
            let cipher = formats::read_cipher(&read_text(input.as_deref())?)?;
            let otp_key = formats::read_otp_key(&read_text(Some(&key))?)?;
            write_bytes(out.as_deref(), &otp::decipher(&cipher, &otp_key)?)
        }
        Command::Hide {
            source,
            input,
            out,
            stego_key,
            seed,
        } => {
            let cipher = formats::read_cipher(&read_text(input.as_deref())?)?;
            let mut rng = random_source(seed);
            let bundle = match source.method {
                Method::Paragraph => {
                    let path = source
                        .cover
                        .ok_or_else(|| Error::Usage("paragraph method needs --cover".into()))?;
                    let cover = read_text(Some(&path))?;
                    stego::hide(source.method, &cipher, CoverSource::Text(&cover), &mut rng)?
                }
                m => {
                    let dict = load_dictionary(source.dict.as_deref())?;
                    stego::hide(m, &cipher, CoverSource::Dictionary(&dict), &mut rng)?
                }
            };
            write_bytes(Some(&stego_key), formats::write_stego_key(&bundle.stego_key).as_bytes())?;
            write_bytes(out.as_deref(), bundle.stego_text.as_bytes())?;
            let s = &bundle.stats;
            let capacity = s
                .capacity_percent()
                .map_or_else(|| "n/a".to_string(), |p| format!("{p:.2}%"));
            eprintln!(
                "hidden {} bytes, cover {} bytes, capacity {capacity}, {} words, {} reused",
                s.hidden_bytes, s.cover_bytes, s.words_used, s.reuse_warnings
            );
            Ok(())
        }
        Command::Seek {
            method,
            stego,
            stego_key,
            out,
        } => {
            let text = read_text(stego.as_deref())?;
            let key = formats::read_stego_key(method, &read_text(Some(&stego_key))?)?;
            let cipher = stego::seek(&text, &key)?;
            write_bytes(out.as_deref(), formats::write_cipher(&cipher).as_bytes())
        }
        Command::Measure { kind } => match kind {
            Measure::Capacity {
                hidden_bytes,
                cover_bytes,
                input,
                cover,
            } => {
                let hidden = match hidden_bytes {
                    Some(n) => n,
                    None => read_bytes(input.as_deref())?.len(),
                };
                let cover = match cover_bytes {
                    Some(n) => n,
                    None => read_bytes(cover.as_deref())?.len(),
                };
                let report = CapacityReport::new(hidden, cover)?;
                println!("{:.2}", report.percent);
                Ok(())
            }
            Measure::Jaro { cover, stego, format } => {
                let report =
                    metrics::stego_similarity_report(&read_text(Some(&cover))?, &read_text(Some(&stego))?)?;
                let text = match format {
                    OutputFormat::Tsv => report.to_tsv(),
                    OutputFormat::Md => report.to_markdown(),
                };
                write_bytes(None, text.as_bytes())
            }
        },
        Command::Bench {
            dict,
            cover,
            seed,
            format,
            out,
        } => {
            let dict = load_dictionary(dict.as_deref())?;
            let corpus = match cover {
                Some(p) => read_text(Some(&p))?,
                None => paragraph::BUNDLED_COVER.to_string(),
            };
            let report = bench::run(&dict, &corpus, seed)?;
            if report.reuse_warnings > 0 {
                eprintln!("warning: {} word picks repeated an earlier word", report.reuse_warnings);
            }
            write_bytes(out.as_deref(), report.render(format.into()).as_bytes())
        }
        Command::DictCheck { method, dict } => {
            let dict = load_dictionary(dict.as_deref())?;
            let report = dict.audit_coverage(method);
            let text: String = report.gaps.iter().map(|g| format!("{g}\n")).collect();
            write_bytes(None, text.as_bytes())?;
            if report.is_complete() {
                Ok(())
            } else {
                Err(Error::EmptyBucket(report.gaps[0].query()))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("textsteg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
