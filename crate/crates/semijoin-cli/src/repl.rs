//! Turn-based terminal play of the comparison game.
//!
//! The human plays one side (spoiler or duplicator), the engine the other.
//! Every entered move is validated: spoiler moves must come from the tuple
//! space of the chosen database, duplicator answers must be legal for the
//! pending move. Illegal input never advances the game; the valid choices
//! are printed instead.

use std::io::{BufRead, Write};

use semijoin::game::{Configuration, GameSpace, Rank, Side};
use semijoin::parse::parse_tuple;
use semijoin::value::Tuple;

/// Run the loop until the game is decided, the round cap is reached, or the
/// human quits. `human_is_duplicator` selects the human's role.
pub fn run(
    space: &GameSpace,
    left: Tuple,
    right: Tuple,
    max_rounds: Option<u32>,
    human_is_duplicator: bool,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let mut cfg = Configuration::new(left, right);

    writeln!(
        out,
        "comparison game: you play the {}",
        if human_is_duplicator {
            "duplicator"
        } else {
            "spoiler"
        }
    )?;
    for side in [Side::Left, Side::Right] {
        let moves: Vec<String> = space.moves(side).iter().map(|t| t.to_string()).collect();
        writeln!(
            out,
            "{side} tuple space ({}): {}",
            moves.len(),
            moves.join(" ")
        )?;
    }
    if !space
        .win0(&cfg.left, &cfg.right)
        .expect("validated configuration")
    {
        writeln!(
            out,
            "configuration {cfg} fails the 0-round conditions: spoiler wins immediately"
        )?;
        return Ok(());
    }
    writeln!(out, "starting configuration {cfg}")?;

    let mut round = 1u32;
    loop {
        if let Some(cap) = max_rounds {
            if round > cap {
                writeln!(out, "duplicator survived {cap} round(s): duplicator wins")?;
                return Ok(());
            }
        }
        writeln!(out, "-- round {round}, configuration {cfg}")?;
        let advanced = if human_is_duplicator {
            engine_spoils_human_answers(space, &mut cfg, round, input, out)?
        } else {
            human_spoils_engine_answers(space, &mut cfg, round, input, out)?
        };
        if !advanced {
            return Ok(());
        }
        round += 1;
    }
}

/// Engine plays the spoiler. Returns false when the game ended.
fn engine_spoils_human_answers(
    space: &GameSpace,
    cfg: &mut Configuration,
    round: u32,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> std::io::Result<bool> {
    let (side, mv) = match space
        .best_spoiler_move(cfg)
        .expect("validated configuration")
    {
        Some(found) => found,
        None => {
            writeln!(
                out,
                "the engine has no winning line from {cfg} (the duplicator can survive forever); engine concedes"
            )?;
            return Ok(false);
        }
    };
    writeln!(out, "spoiler plays {mv} on the {side} side")?;
    let answers = space
        .legal_answers(cfg, side, &mv)
        .expect("engine moves are valid");
    if answers.is_empty() {
        writeln!(
            out,
            "no legal answer exists: spoiler wins after {round} round(s)"
        )?;
        return Ok(false);
    }
    let answer_side = side.opposite();
    loop {
        writeln!(
            out,
            "your answer on the {answer_side} side (a tuple like (1,2), or quit):"
        )?;
        let Some(line) = read_line(input)? else {
            writeln!(out, "input closed; stopping")?;
            return Ok(false);
        };
        if line == "quit" {
            writeln!(out, "you resigned: spoiler wins")?;
            return Ok(false);
        }
        let answer = match parse_tuple(&line) {
            Ok(t) => t,
            Err(e) => {
                writeln!(out, "cannot read that tuple: {e}")?;
                continue;
            }
        };
        if !answers.contains(&answer) {
            let opts: Vec<String> = answers.iter().map(|t| t.to_string()).collect();
            writeln!(out, "illegal answer; legal answers: {}", opts.join(" "))?;
            continue;
        }
        *cfg = successor(side, &mv, &answer);
        writeln!(out, "configuration is now {cfg}")?;
        return Ok(true);
    }
}

/// Human plays the spoiler. Returns false when the game ended.
fn human_spoils_engine_answers(
    space: &GameSpace,
    cfg: &mut Configuration,
    round: u32,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> std::io::Result<bool> {
    let (side, mv) = loop {
        writeln!(
            out,
            "your move as spoiler (side and tuple, e.g. `left (1,2)` or `right ()`, or quit):"
        )?;
        let Some(line) = read_line(input)? else {
            writeln!(out, "input closed; stopping")?;
            return Ok(false);
        };
        if line == "quit" {
            writeln!(out, "you resigned: duplicator wins")?;
            return Ok(false);
        }
        let Some((side_word, tuple_text)) = line.split_once(char::is_whitespace) else {
            writeln!(out, "enter a side and a tuple, e.g. `left (1,2)`")?;
            continue;
        };
        let side = match side_word {
            "left" | "a" | "A" => Side::Left,
            "right" | "b" | "B" => Side::Right,
            other => {
                writeln!(out, "unknown side `{other}`; use left or right")?;
                continue;
            }
        };
        let mv = match parse_tuple(tuple_text.trim()) {
            Ok(t) => t,
            Err(e) => {
                writeln!(out, "cannot read that tuple: {e}")?;
                continue;
            }
        };
        match space.legal_answers(cfg, side, &mv) {
            Err(_) => {
                let moves: Vec<String> = space.moves(side).iter().map(|t| t.to_string()).collect();
                writeln!(
                    out,
                    "{mv} is not in the {side} tuple space; valid moves: {}",
                    moves.join(" ")
                )?;
            }
            Ok(_) => break (side, mv),
        }
    };
    match space
        .best_duplicator_move(cfg, side, &mv)
        .expect("move was validated")
    {
        None => {
            writeln!(
                out,
                "duplicator has no legal answer to {mv}: spoiler wins after {round} round(s)"
            )?;
            Ok(false)
        }
        Some(answer) => {
            writeln!(out, "duplicator answers {answer}")?;
            *cfg = successor(side, &mv, &answer);
            writeln!(out, "configuration is now {cfg}")?;
            let rank = space
                .rank(&cfg.left, &cfg.right)
                .expect("successor stays in the space");
            if rank == Rank::Infinite {
                writeln!(out, "(the duplicator can hold this position forever)")?;
            }
            Ok(true)
        }
    }
}

fn successor(side: Side, mv: &Tuple, answer: &Tuple) -> Configuration {
    match side {
        Side::Left => Configuration::new(mv.clone(), answer.clone()),
        Side::Right => Configuration::new(answer.clone(), mv.clone()),
    }
}

fn read_line(input: &mut dyn BufRead) -> std::io::Result<Option<String>> {
    let mut line = String::new();
    if input.read_line(&mut line)? == 0 {
        return Ok(None);
    }
    Ok(Some(line.trim().to_string()))
}
