// Guess composition over the letter bank. The composed guess is the revealed
// prefix (locked by purchased hints) followed by the letters of tapped bank
// tiles, in tap order. Only unconsumed tiles that are not already part of the
// guess can be tapped; deleting returns the last tapped tile to the bank.

import type { ChallengeView } from "./api";

export function revealedPrefix(view: ChallengeView): string {
  return (view.revealed ?? []).map((r) => r.letter).join("");
}

export function canTap(view: ChallengeView, taps: number[], index: number): boolean {
  const cell = view.bank?.[index];
  if (!cell || cell.consumed) return false;
  return !taps.includes(index);
}

export function tapTile(view: ChallengeView, taps: number[], index: number): number[] {
  if (!canTap(view, taps, index)) return taps;
  return [...taps, index];
}

export function untapLast(taps: number[]): number[] {
  return taps.slice(0, -1);
}

export function guessText(view: ChallengeView, taps: number[]): string {
  const tapped = taps.map((i) => view.bank?.[i]?.letter ?? "").join("");
  return revealedPrefix(view) + tapped;
}

export function tileIsSpent(view: ChallengeView, taps: number[], index: number): boolean {
  const cell = view.bank?.[index];
  return !cell || cell.consumed || taps.includes(index);
}
