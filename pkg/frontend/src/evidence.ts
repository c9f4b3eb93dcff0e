import { el } from './dom';
import type { WizardApp } from './app';
import { DIRECT_SOURCES, INDIRECT_SOURCES, PURPOSE_TAGS } from './types';
import type { EvidenceItem } from './types';

function sourceOptions(channel: string): readonly string[] {
  return channel === 'direct' ? DIRECT_SOURCES : INDIRECT_SOURCES;
}

export function renderEvidencePanel(app: WizardApp): HTMLElement {
  const state = app.store.get();
  const session = state.session;
  const panel = el('aside', { class: 'evidence-panel' });
  panel.append(el('h2', {}, ['Intention evidence']));

  const resolution = session?.intention;
  const badgeText = resolution?.established
    ? `intention: established (${resolution.prevailing_channel})`
    : 'intention: not established';
  panel.append(
    el('p', { class: 'intention-badge', 'data-established': String(!!resolution?.established) }, [
      badgeText,
    ]),
  );

  const inventory = el('ul', { class: 'evidence-list' });
  for (const item of session?.case.evidence ?? []) {
    inventory.append(
      el('li', { class: 'evidence-item', 'data-evidence': item.id }, [
        `${item.id}: ${item.channel}/${item.source} ${item.polarity}` +
          (item.purposes.length ? ` [${item.purposes.join(', ')}]` : ''),
      ]),
    );
  }
  panel.append(inventory);

  if (session && session.status === 'open') {
    panel.append(renderForm(app));
  }
  return panel;
}

function renderForm(app: WizardApp): HTMLElement {
  const form = el('form', { class: 'evidence-form' });

  const idInput = el('input', { name: 'id', placeholder: 'evidence id' });
  const channelSelect = el('select', { name: 'channel' });
  for (const channel of ['direct', 'indirect']) {
    channelSelect.append(el('option', { value: channel }, [channel]));
  }
  const sourceSelect = el('select', { name: 'source' });
  const syncSources = () => {
    while (sourceSelect.firstChild) sourceSelect.removeChild(sourceSelect.firstChild);
    for (const source of sourceOptions(channelSelect.value)) {
      sourceSelect.append(el('option', { value: source }, [source]));
    }
  };
  syncSources();
  channelSelect.addEventListener('change', syncSources);

  const polaritySelect = el('select', { name: 'polarity' });
  for (const polarity of ['affirms', 'denies', 'neutral']) {
    polaritySelect.append(el('option', { value: polarity }, [polarity]));
  }

  const purposeSelect = el('select', { name: 'purposes', multiple: 'multiple' });
  for (const tag of PURPOSE_TAGS) {
    purposeSelect.append(el('option', { value: tag }, [tag]));
  }

  const noteInput = el('input', { name: 'note', placeholder: 'note' });
  const provenanceInput = el('input', { name: 'provenance', placeholder: 'provenance' });
  const errorLine = el('p', { class: 'evidence-error' }, [
    app.store.get().evidenceError ?? '',
  ]);
  const submit = el('button', { type: 'submit', class: 'add-evidence' }, ['add evidence']);

  form.append(
    idInput, channelSelect, sourceSelect, polaritySelect,
    purposeSelect, noteInput, provenanceInput, submit, errorLine,
  );

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const item: EvidenceItem = {
      id: idInput.value.trim(),
      channel: channelSelect.value as EvidenceItem['channel'],
      source: sourceSelect.value,
      polarity: polaritySelect.value as EvidenceItem['polarity'],
      purposes: Array.from(purposeSelect.selectedOptions).map((o) => o.value),
      note: noteInput.value,
      provenance: provenanceInput.value,
    };
    void app.attachEvidence(item);
  });
  return form;
}
