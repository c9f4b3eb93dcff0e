import { el } from './dom';
import type { WizardApp } from './app';

export function renderVerdictPanel(app: WizardApp): HTMLElement {
  const state = app.store.get();
  const session = state.session;
  const verdict = session?.verdict;
  const panel = el('section', { class: 'verdict-panel' });
  if (!session || !verdict) {
    panel.append(el('p', {}, ['No verdict yet.']));
    return panel;
  }

  const reason = verdict.trace[verdict.trace.length - 1];
  panel.append(
    el('h2', { class: 'verdict-headline', 'data-qualification': verdict.qualification }, [
      verdict.qualification,
    ]),
    el('p', { class: 'verdict-reason' }, [reason.prompt]),
    el('p', { class: 'verdict-citation' }, [reason.citation]),
  );

  if (verdict.risk_class) {
    const card = el('div', { class: 'class-card', 'data-risk-class': verdict.risk_class }, [
      el('h3', {}, [`Risk class ${verdict.risk_class}`]),
    ]);
    for (const rule of verdict.classification ?? []) {
      card.append(
        el('p', { class: 'class-rule' }, [
          `${rule.risk_class}: ${rule.label} (${rule.citation})` +
            (rule.combinator_derived ? ' [combinator-derived]' : ''),
        ]),
      );
    }
    panel.append(card);
  }

  const trace = el('ol', { class: 'trace-timeline' });
  for (const step of verdict.trace) {
    trace.append(
      el('li', { class: 'trace-step', 'data-node': step.node }, [
        el('span', { class: 'trace-prompt' }, [step.prompt]),
        el('span', { class: 'trace-answer' }, [
          step.answer === null ? '—' : step.answer ? 'yes' : 'no',
        ]),
        el('span', { class: 'trace-by' }, [step.answered_by ?? 'verdict']),
        el('span', { class: 'trace-citation' }, [step.citation]),
      ]),
    );
  }
  panel.append(el('h3', {}, ['Reasoning trace']), trace);

  const downloads = el('div', { class: 'downloads' });
  for (const format of ['md', 'json'] as const) {
    const link = el(
      'a',
      {
        class: `download download-${format}`,
        href: app.client.reportUrl(session.id, format),
        download: `report-${session.id}.${format}`,
      },
      [`download report (${format})`],
    );
    downloads.append(link);
  }
  panel.append(downloads);
  return panel;
}
