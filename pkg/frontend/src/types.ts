/** Wire types mirroring the HTTP API responses. */

export type Lang = "zh" | "en" | "auto";
export type SearchMode = "exact" | "prefix" | "substring";

export interface SenseSummary {
  id: number;
  zh: string;
  en: string;
  pos: string;
  def_text: string;
}

export interface ScoredSense {
  sense: SenseSummary;
  score: number;
}

export type TreeHead =
  | { sememe: string }
  | { placeholder: string }
  | { literal: string };

export interface TreeNode {
  head: TreeHead;
  children: { role: string; tree: TreeNode }[];
}

export interface SenseCard {
  id: number;
  zh: string;
  en: string;
  pos: string;
  def_text: string;
  def_tree: TreeNode;
  sentiment: string | null;
  examples: string[];
  near: ScoredSense[];
}

export interface SememeInfo {
  id: number;
  en: string;
  zh: string;
  ref: string;
  category: string;
  parent: number | null;
}

export interface Stats {
  sense_count: number;
  distinct_zh_words: number;
  distinct_en_words: number;
  sememe_count: number;
}

export interface SimilarityResult {
  score: number;
  best_pair?: { a: SenseSummary; b: SenseSummary };
}
