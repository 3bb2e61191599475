// The built-in practice round played before the first real session. It is a
// plain demo puzzle adjudicated locally: no security content is involved and
// nothing is reported to the service.

export interface PracticeChallenge {
  answer: string;
  bank: string[];
  captions: string[];
}

export const PRACTICE: PracticeChallenge = {
  answer: "STAR",
  bank: ["S", "T", "A", "R", "E", "N", "O", "L", "P", "U", "K", "D"],
  captions: ["night sky", "sheriff's badge", "film premiere", "sea creature"],
};

export function practiceGuessIsRight(guess: string): boolean {
  return guess.trim().toUpperCase() === PRACTICE.answer;
}
