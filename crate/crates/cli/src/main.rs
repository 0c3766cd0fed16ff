use std::io::Write;
use std::process::ExitCode;

use fanocalc::{CommandRegistry, Format};

fn main() -> ExitCode {
    let registry = CommandRegistry::default();
    let cfg = match registry.parse(std::env::args_os()) {
        Err(e) => e.exit(),
        Ok(Err(e)) => {
            eprintln!("{}", e);
            return ExitCode::from(e.exit_code() as u8);
        }
        Ok(Ok(cfg)) => cfg,
    };
    let report = match registry.execute(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{}", e);
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = match cfg.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &cfg.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("cannot write {}: {}", path.display(), e);
                return ExitCode::from(4);
            }
        }
        None => {
            if let Err(e) = writeln!(std::io::stdout(), "{}", text) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("cannot write output: {}", e);
                    return ExitCode::from(4);
                }
            }
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
