// Minimal observable store: the whole UI re-renders from one state object,
// with the server as the source of truth after every mutation.

import type { NextPayload, SessionState } from './types';

export interface StepLogEntry {
  node: string;
  prompt: string;
  citation: string;
  answer: boolean;
}

export interface AppState {
  phase: 'start' | 'session' | 'verdict';
  rulebooks: { id: string; version: string }[];
  session: SessionState | null;
  next: NextPayload | null;
  /** Questions answered in this browser, in the order the server asked. */
  stepLog: StepLogEntry[];
  /** Node currently re-opened for a what-if edit, if any. */
  editing: string | null;
  error: string | null;
  /** Validation message shown inline in the evidence form. */
  evidenceError: string | null;
  busy: boolean;
}

export const initialState: AppState = {
  phase: 'start',
  rulebooks: [],
  session: null,
  next: null,
  stepLog: [],
  editing: null,
  error: null,
  evidenceError: null,
  busy: false,
};

export class Store {
  private state: AppState = { ...initialState };
  private listeners = new Set<() => void>();

  get(): AppState {
    return this.state;
  }

  set(patch: Partial<AppState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener();
  }

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }
}

/** Drop log entries the server no longer has an answer for (invalidation),
 * without re-deriving any path logic locally. */
export function pruneStepLog(
  log: StepLogEntry[],
  answers: Record<string, boolean>,
): StepLogEntry[] {
  return log.filter(
    (entry) => entry.node in answers && answers[entry.node] === entry.answer,
  );
}
