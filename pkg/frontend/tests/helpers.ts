import { mount } from '../src/main';
import type { WizardApp } from '../src/app';

export async function waitFor<T>(
  probe: () => T | null | undefined | false,
  what = 'condition',
  timeoutMs = 10_000,
): Promise<T> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    const result = probe();
    if (result) return result;
    if (Date.now() > deadline) throw new Error(`timed out waiting for ${what}`);
    await new Promise((resolve) => setTimeout(resolve, 25));
  }
}

export function query<T extends Element>(root: HTMLElement, selector: string): T | null {
  return root.querySelector<T>(selector);
}

export async function bootApp(base: string): Promise<{ app: WizardApp; root: HTMLElement }> {
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.getElementById('app') as HTMLElement;
  const app = mount(root, base);
  await waitFor(
    () => root.querySelector('[data-rulebook="mdr-2017-745"]'),
    'rulebook picker',
  );
  return { app, root };
}

export async function startMdrSession(base: string) {
  const { app, root } = await bootApp(base);
  (root.querySelector('[data-rulebook="mdr-2017-745"]') as HTMLButtonElement).click();
  await waitFor(
    () => root.querySelector('.question-panel[data-node="q_is_software"]'),
    'first question',
  );
  return { app, root };
}

export async function addEvidence(
  root: HTMLElement,
  fields: {
    id: string;
    channel: 'direct' | 'indirect';
    source: string;
    polarity: string;
    purposes?: string[];
  },
): Promise<void> {
  const form = await waitFor(
    () => root.querySelector<HTMLFormElement>('.evidence-form'),
    'evidence form',
  );
  (form.querySelector('input[name="id"]') as HTMLInputElement).value = fields.id;
  const channel = form.querySelector('select[name="channel"]') as HTMLSelectElement;
  channel.value = fields.channel;
  channel.dispatchEvent(new window.Event('change', { bubbles: true }));
  (form.querySelector('select[name="source"]') as HTMLSelectElement).value = fields.source;
  (form.querySelector('select[name="polarity"]') as HTMLSelectElement).value = fields.polarity;
  const purposeSelect = form.querySelector('select[name="purposes"]') as HTMLSelectElement;
  for (const option of Array.from(purposeSelect.options)) {
    option.selected = (fields.purposes ?? []).includes(option.value);
  }
  form.dispatchEvent(new window.Event('submit', { bubbles: true, cancelable: true }));
  await waitFor(
    () => root.querySelector(`.evidence-item[data-evidence="${fields.id}"]`),
    `evidence item ${fields.id} in inventory`,
  );
}

export async function answerCurrent(
  root: HTMLElement,
  node: string,
  answer: 'yes' | 'no',
): Promise<void> {
  const panel = await waitFor(
    () => root.querySelector(`.question-panel[data-node="${node}"]`),
    `question ${node}`,
  );
  (panel.querySelector(`[data-answer="${answer}"]`) as HTMLButtonElement).click();
  await waitFor(
    () => !root.querySelector(`.question-panel[data-node="${node}"]`),
    `question ${node} to resolve`,
  );
}
