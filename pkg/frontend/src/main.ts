import { ApiClient } from './api';
import { WizardApp } from './app';

declare global {
  interface Window {
    MDSW_API?: string;
    mdswApp?: WizardApp;
  }
}

function apiBaseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get('api');
  return window.MDSW_API ?? fromQuery ?? 'http://127.0.0.1:8000';
}

export function mount(root: HTMLElement, baseUrl: string = apiBaseUrl()): WizardApp {
  const app = new WizardApp(new ApiClient(baseUrl), root);
  app.render();
  void app.boot();
  return app;
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  window.mdswApp = mount(document.getElementById('app') as HTMLElement);
}
