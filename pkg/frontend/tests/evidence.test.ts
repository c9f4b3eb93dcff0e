// Evidence panel behavior: client-side channel/source pairing, the live
// intention badge, and inline validation errors mirrored from the API.

import { describe, expect, inject, it } from 'vitest';
import { addEvidence, startMdrSession, waitFor } from './helpers';

const base = () => inject('apiBase');

describe('evidence panel', () => {
  it('limits the source dropdown to the selected channel', async () => {
    const { root } = await startMdrSession(base());
    const form = root.querySelector('.evidence-form') as HTMLFormElement;
    const channel = form.querySelector('select[name="channel"]') as HTMLSelectElement;
    const source = form.querySelector('select[name="source"]') as HTMLSelectElement;

    expect(Array.from(source.options).map((o) => o.value)).toEqual([
      'marketing',
      'internal_documentation',
      'informal_statement',
    ]);

    channel.value = 'indirect';
    channel.dispatchEvent(new window.Event('change', { bubbles: true }));
    expect(Array.from(source.options).map((o) => o.value)).toEqual([
      'data_gathering',
      'software_specification',
      'data_analysis',
    ]);
  });

  it('flips the badge when an affirming item arrives', async () => {
    const { root } = await startMdrSession(base());
    expect(root.querySelector('.intention-badge')!.textContent).toBe(
      'intention: not established',
    );
    await addEvidence(root, {
      id: 'mk',
      channel: 'direct',
      source: 'marketing',
      polarity: 'affirms',
      purposes: ['disease.diagnosis'],
    });
    expect(root.querySelector('.intention-badge')!.textContent).toBe(
      'intention: established (direct)',
    );
  });

  it('keeps the badge when a denying item follows an affirming one', async () => {
    const { root } = await startMdrSession(base());
    await addEvidence(root, {
      id: 'mk',
      channel: 'direct',
      source: 'marketing',
      polarity: 'affirms',
      purposes: ['disease.diagnosis'],
    });
    await addEvidence(root, {
      id: 'spec',
      channel: 'indirect',
      source: 'software_specification',
      polarity: 'denies',
    });
    expect(root.querySelector('.intention-badge')!.textContent).toBe(
      'intention: established (direct)',
    );
  });

  it('shows API validation errors inline', async () => {
    const { root } = await startMdrSession(base());
    const form = root.querySelector('.evidence-form') as HTMLFormElement;
    (form.querySelector('input[name="id"]') as HTMLInputElement).value = 'bad';
    const polarity = form.querySelector('select[name="polarity"]') as HTMLSelectElement;
    polarity.value = 'affirms'; // affirming without purposes is invalid
    form.dispatchEvent(new window.Event('submit', { bubbles: true, cancelable: true }));
    const error = await waitFor(() => {
      const line = root.querySelector('.evidence-error');
      return line?.textContent ? line : null;
    }, 'inline evidence error');
    expect(error.textContent).toContain('invalid-evidence');
  });
});
