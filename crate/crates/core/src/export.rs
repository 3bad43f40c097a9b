//! Text output for count tables. Every table the CLI prints goes through
//! these writers, so the shapes below are the exact wire formats:
//!
//! - CSV: header `n,u_tilde,v,c` (or `n,<column>` for a single column),
//!   LF line endings, no trailing comma.
//! - b-file: `n a(n)` separated by one space, no comments.

use std::io::{self, Write};

use crate::enumerate::{Column, CountTable};

pub fn write_csv<W: Write + ?Sized>(out: &mut W, table: &CountTable, columns: &[Column]) -> io::Result<()> {
    write!(out, "n")?;
    for c in columns {
        write!(out, ",{}", c.name())?;
    }
    writeln!(out)?;
    for n in 0..=table.limit {
        write!(out, "{n}")?;
        for &c in columns {
            write!(out, ",{}", table.column(c)[n])?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn write_bfile<W: Write + ?Sized>(out: &mut W, table: &CountTable, column: Column) -> io::Result<()> {
    for (n, value) in table.column(column).iter().enumerate() {
        writeln!(out, "{n} {value}")?;
    }
    Ok(())
}
