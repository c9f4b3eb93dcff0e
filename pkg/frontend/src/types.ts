// Wire types of the assessment service API. The UI never computes verdicts
// or classes itself; everything here is read back from the server.

export interface RulebookRef {
  id: string;
  version: string;
}

export interface SessionSummary {
  id: string;
  rulebook: RulebookRef;
  status: 'open' | 'finalized';
  created: string;
  updated: string;
}

export interface Question {
  node: string;
  prompt: string;
  kind: string; // "boolean" | "derived(<fn>)"
  citation: string;
  derived_value?: boolean | null;
}

export interface TraceStep {
  node: string;
  prompt: string;
  answer: boolean | null;
  citation: string;
  answered_by: 'explicit' | 'derived' | 'override' | null;
}

export interface ClassRule {
  label: string;
  risk_class: string;
  citation: string;
  combinator_derived: boolean;
}

export interface VerdictDoc {
  qualification: string;
  risk_class: string | null;
  exit_node: string;
  rulebook: RulebookRef;
  trace: TraceStep[];
  classification: ClassRule[] | null;
}

export type NextPayload =
  | { type: 'question'; question: Question }
  | { type: 'verdict'; verdict: VerdictDoc };

export interface EvidenceItem {
  id: string;
  channel: 'direct' | 'indirect';
  source: string;
  polarity: 'affirms' | 'denies' | 'neutral';
  purposes: string[];
  note?: string;
  provenance?: string;
}

export interface IntentionFinding {
  channel: string;
  established: boolean;
  supporting: string[];
  contradicting: string[];
}

export interface IntentionResolution {
  established: boolean;
  prevailing_channel: 'direct' | 'indirect' | 'both' | null;
  direct: IntentionFinding;
  indirect: IntentionFinding;
}

export interface CaseDoc {
  schema: string;
  id: string;
  name: string;
  description: string;
  evidence: EvidenceItem[];
  answers: Record<string, boolean>;
  classification_profile: Record<string, boolean> | null;
  linked_device_class: string | null;
}

export interface SessionState extends SessionSummary {
  case: CaseDoc;
  verdict: VerdictDoc | null;
  intention: IntentionResolution;
  next: NextPayload;
}

export const DIRECT_SOURCES = [
  'marketing',
  'internal_documentation',
  'informal_statement',
] as const;

export const INDIRECT_SOURCES = [
  'data_gathering',
  'software_specification',
  'data_analysis',
] as const;

export const PURPOSE_TAGS = [
  'disease.diagnosis',
  'disease.prevention',
  'disease.monitoring',
  'disease.prediction',
  'disease.prognosis',
  'disease.treatment',
  'disease.alleviation',
  'injury.diagnosis',
  'injury.monitoring',
  'injury.treatment',
  'injury.alleviation',
  'injury.compensation',
  'anatomy.investigation',
  'anatomy.replacement',
  'anatomy.modification',
  'invitro.information',
] as const;
