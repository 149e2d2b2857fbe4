/** Wire types mirroring the skillgrep service JSON, field for field. */

export type Range = [number | null, number | null] | null;

export interface QueryJson {
  skills: string[];
  technologies: string[];
  industries: string[];
  micro_industries: string[];
  revenue_kusd_range: Range;
  employees_range: Range;
  departments: string[];
  management_levels: string[];
  degree_keywords: string[];
  free_keywords: string[];
}

export interface RankingFactors {
  feedback: number;
  af: number;
  ef: number;
  nlf: number;
  cks: number;
  neutral: string[];
}

export interface SearchResult {
  posting_id: string;
  company_domain: string | null;
  rank_score: number;
  matched_skills: Record<string, number>;
  factors: RankingFactors;
}

export interface CompanySummary {
  domain: string;
  employees: number | null;
  revenue_kusd: number | null;
  industry: string | null;
  alexa_rank: number | null;
  social_followers: number | null;
  technographics: string[];
}

export interface CompanyGroup {
  domain: string | null;
  best_score: number;
  results: SearchResult[];
  company: CompanySummary | null;
}

export interface SearchResponse {
  query: QueryJson;
  total_matches: number;
  results: SearchResult[];
  groups: CompanyGroup[];
}

export interface Contact {
  name: string;
  title_raw: string;
  level: string;
  departments: string[];
}
