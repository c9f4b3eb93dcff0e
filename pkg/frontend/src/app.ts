import { ApiClient, ApiError } from './api';
import { clear, el } from './dom';
import { pruneStepLog, Store } from './store';
import type { StepLogEntry } from './store';
import { renderEvidencePanel } from './evidence';
import { renderVerdictPanel } from './verdict';
import { renderQuestionPanel, renderTimeline } from './wizard';
import type { CaseDoc, EvidenceItem } from './types';

/** Controller for one assessment session. All answers, invalidations and
 * verdicts come from the API; the UI only remembers the order in which the
 * server asked its questions. */
export class WizardApp {
  readonly store = new Store();

  constructor(
    readonly client: ApiClient,
    readonly root: HTMLElement,
  ) {
    this.store.subscribe(() => this.render());
  }

  async boot(): Promise<void> {
    await this.guard(async () => {
      const { rulebooks } = await this.client.listRulebooks();
      this.store.set({ rulebooks });
    });
  }

  async start(rulebookId: string): Promise<void> {
    await this.guard(async () => {
      const created = await this.client.createSession(rulebookId);
      this.store.set({ stepLog: [], editing: null });
      await this.refresh(created.session.id);
    });
  }

  async answer(node: string, value: boolean): Promise<void> {
    const state = this.store.get();
    const next = state.next;
    const asked =
      next && next.type === 'question' && next.question.node === node
        ? next.question
        : null;
    await this.guard(async () => {
      const session = state.session;
      if (!session) throw new Error('no active session');
      await this.client.submitAnswer(session.id, node, value);
      if (asked) {
        this.appendStep({
          node,
          prompt: asked.prompt,
          citation: asked.citation,
          answer: value,
        });
      }
      await this.refresh(session.id);
    });
  }

  async attachEvidence(item: EvidenceItem): Promise<void> {
    const session = this.store.get().session;
    if (!session) return;
    this.store.set({ busy: true, evidenceError: null });
    try {
      await this.client.attachEvidence(session.id, item);
      await this.refresh(session.id);
      this.store.set({ busy: false });
    } catch (error) {
      // validation problems belong inline next to the form; anything else
      // (network, server) goes to the retryable banner
      if (error instanceof ApiError && error.status < 500) {
        this.store.set({
          busy: false,
          evidenceError: `${error.message} (${error.code})`,
        });
      } else {
        this.store.set({
          busy: false,
          error: error instanceof ApiError ? error.message : String(error),
        });
      }
    }
  }

  /** Re-answer an earlier step. Open sessions re-enter directly (the server
   * drops downstream answers); finalized sessions are immutable, so the
   * what-if forks a new session seeded with everything up to that step. */
  async whatIf(node: string, value: boolean): Promise<void> {
    const state = this.store.get();
    const session = state.session;
    if (!session) return;
    if (session.status === 'open') {
      await this.answer(node, value);
      this.store.set({ editing: null });
      return;
    }
    await this.guard(async () => {
      const index = state.stepLog.findIndex((entry) => entry.node === node);
      const kept = index < 0 ? [] : state.stepLog.slice(0, index);
      const seed: Partial<CaseDoc> = {
        id: session.case.id,
        name: session.case.name,
        description: session.case.description,
        evidence: session.case.evidence,
        answers: Object.fromEntries(kept.map((s) => [s.node, s.answer])),
        classification_profile: session.case.classification_profile,
        linked_device_class: session.case.linked_device_class,
      };
      const created = await this.client.createSession(
        session.rulebook.id,
        seed,
      );
      this.store.set({ stepLog: kept, editing: null });
      await this.client.submitAnswer(created.session.id, node, value);
      const edited = state.stepLog[index];
      this.appendStep({
        node,
        prompt: edited ? edited.prompt : node,
        citation: edited ? edited.citation : '',
        answer: value,
      });
      await this.refresh(created.session.id);
    });
  }

  openEditor(node: string): void {
    this.store.set({ editing: node });
  }

  closeEditor(): void {
    this.store.set({ editing: null });
  }

  dismissError(): void {
    this.store.set({ error: null });
  }

  private appendStep(entry: StepLogEntry): void {
    this.store.set({ stepLog: [...this.store.get().stepLog, entry] });
  }

  private async refresh(sessionId: string): Promise<void> {
    const session = await this.client.getSession(sessionId);
    const stepLog = pruneStepLog(this.store.get().stepLog, session.case.answers);
    this.store.set({
      session,
      next: session.next,
      stepLog,
      phase: session.status === 'finalized' ? 'verdict' : 'session',
    });
  }

  private async guard(work: () => Promise<void>): Promise<void> {
    this.store.set({ busy: true, error: null });
    try {
      await work();
      this.store.set({ busy: false });
    } catch (error) {
      const message =
        error instanceof ApiError
          ? `${error.message} (${error.code})`
          : String(error);
      this.store.set({ busy: false, error: message });
    }
  }

  render(): void {
    const state = this.store.get();
    clear(this.root);
    const shell = el('div', { class: 'app' });

    if (state.error) {
      const banner = el('div', { class: 'error-banner', role: 'alert' }, [
        state.error,
      ]);
      const retry = el('button', { class: 'dismiss' }, ['dismiss']);
      retry.addEventListener('click', () => this.dismissError());
      banner.append(retry);
      shell.append(banner);
    }

    if (state.phase === 'start') {
      shell.append(this.renderStart());
    } else {
      const columns = el('div', { class: 'columns' });
      const main = el('section', { class: 'main-panel' });
      main.append(renderTimeline(this));
      if (state.phase === 'verdict') {
        main.append(renderVerdictPanel(this));
      } else if (state.next && state.next.type === 'question') {
        main.append(renderQuestionPanel(this, state.next.question));
      }
      columns.append(main, renderEvidencePanel(this));
      shell.append(columns);
    }

    this.root.append(shell);
  }

  private renderStart(): HTMLElement {
    const state = this.store.get();
    const panel = el('section', { class: 'start-panel' }, [
      el('h1', {}, ['Software qualification assessment']),
      el('p', {}, ['Pick the regulatory rulebook to assess against.']),
    ]);
    for (const rulebook of state.rulebooks) {
      const button = el(
        'button',
        { class: 'rulebook-choice', 'data-rulebook': rulebook.id },
        [`${rulebook.id} (version ${rulebook.version})`],
      );
      button.addEventListener('click', () => void this.start(rulebook.id));
      panel.append(button);
    }
    return panel;
  }
}
