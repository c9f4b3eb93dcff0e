import { el } from './dom';
import type { WizardApp } from './app';
import type { Question } from './types';

export function renderQuestionPanel(app: WizardApp, question: Question): HTMLElement {
  const panel = el('section', { class: 'question-panel', 'data-node': question.node });
  panel.append(el('h2', { class: 'question-prompt' }, [question.prompt]));
  panel.append(el('p', { class: 'question-citation' }, [question.citation]));

  if (question.kind.startsWith('derived')) {
    const computed =
      question.derived_value === true
        ? 'yes'
        : question.derived_value === false
          ? 'no'
          : 'undecided';
    panel.append(
      el('p', { class: 'derived-hint' }, [
        `Derived from the evidence on file: ${computed}. ` +
          'Your answer is recorded as an override.',
      ]),
    );
  }

  const controls = el('div', { class: 'answer-controls' });
  for (const value of [true, false]) {
    const label = value ? 'yes' : 'no';
    const button = el(
      'button',
      { class: `answer answer-${label}`, 'data-answer': label },
      [label],
    );
    button.addEventListener('click', () => void app.answer(question.node, value));
    controls.append(button);
  }
  panel.append(controls);
  return panel;
}

export function renderTimeline(app: WizardApp): HTMLElement {
  const state = app.store.get();
  const timeline = el('ol', { class: 'timeline' });
  for (const step of state.stepLog) {
    const item = el('li', { class: 'timeline-step', 'data-node': step.node });
    const summary = el('button', { class: 'step-summary' }, [
      `${step.prompt} — ${step.answer ? 'yes' : 'no'}`,
    ]);
    summary.addEventListener('click', () => app.openEditor(step.node));
    item.append(summary);

    if (state.editing === step.node) {
      const editor = el('div', { class: 'step-editor' }, [
        el('span', {}, ['change answer: ']),
      ]);
      for (const value of [true, false]) {
        const label = value ? 'yes' : 'no';
        const button = el(
          'button',
          { class: 'reanswer', 'data-reanswer': label },
          [label],
        );
        button.addEventListener('click', () => void app.whatIf(step.node, value));
        editor.append(button);
      }
      const cancel = el('button', { class: 'cancel-edit' }, ['keep']);
      cancel.addEventListener('click', () => app.closeEditor());
      editor.append(cancel);
      item.append(editor);
    }
    timeline.append(item);
  }
  return timeline;
}
